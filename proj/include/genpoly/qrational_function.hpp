#pragma once

#include <iosfwd>

#include "genpoly/qpolynomial.hpp"

namespace genpoly {

/// Element of Q(q) in canonical form: coprime numerator and monic denominator.
///
/// Because the canonical form is unique, `==` is structural equality.
class QRationalFunction {
 public:
  QRationalFunction() : den_(1) {}
  QRationalFunction(const Rational& c) : num_(c), den_(1) {}
  QRationalFunction(long c) : QRationalFunction(Rational(c)) {}
  QRationalFunction(QPolynomial p) : num_(std::move(p)), den_(1) {}
  /// num / den reduced to canonical form. Throws DivisionByZero if den == 0.
  QRationalFunction(QPolynomial num, QPolynomial den);

  static QRationalFunction zero() { return {}; }
  static QRationalFunction one() { return QRationalFunction(1); }
  static QRationalFunction q() { return QRationalFunction(QPolynomial::q()); }
  /// q^k for any integer k.
  static QRationalFunction q_power(int k);

  const QPolynomial& numerator() const noexcept { return num_; }
  const QPolynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Throws NotAPolynomial unless the denominator is 1.
  const QPolynomial& as_polynomial() const;

  QRationalFunction& operator+=(const QRationalFunction& rhs);
  QRationalFunction& operator-=(const QRationalFunction& rhs);
  QRationalFunction& operator*=(const QRationalFunction& rhs);
  QRationalFunction& operator/=(const QRationalFunction& rhs);

  friend QRationalFunction operator+(QRationalFunction a, const QRationalFunction& b) { return a += b; }
  friend QRationalFunction operator-(QRationalFunction a, const QRationalFunction& b) { return a -= b; }
  friend QRationalFunction operator*(QRationalFunction a, const QRationalFunction& b) { return a *= b; }
  friend QRationalFunction operator/(QRationalFunction a, const QRationalFunction& b) { return a /= b; }
  QRationalFunction operator-() const;

  friend bool operator==(const QRationalFunction&, const QRationalFunction&) = default;

  QRationalFunction inverse() const;
  /// q -> q^i in numerator and denominator, then re-normalized.
  QRationalFunction adams(int i) const;
  /// Throws PoleAtEvaluationPoint when the (reduced) denominator vanishes at v.
  Rational evaluate(const Rational& v) const;

 private:
  struct Reduced {};
  QRationalFunction(QPolynomial num, QPolynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  QPolynomial num_;
  QPolynomial den_;
};

QRationalFunction pow(const QRationalFunction& base, int exponent);

// Coefficient-ring hooks used by TruncatedSeries.
inline QRationalFunction adams(const QRationalFunction& x, int i) { return x.adams(i); }
QRationalFunction ring_inverse(const QRationalFunction& x);

std::ostream& operator<<(std::ostream& os, const QRationalFunction& f);

}  // namespace genpoly
