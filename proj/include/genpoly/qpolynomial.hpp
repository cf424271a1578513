#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "genpoly/rational.hpp"

namespace genpoly {

/// Dense univariate polynomial in q over the rationals.
///
/// Coefficients are stored by ascending degree with trailing zeros stripped,
/// so the zero polynomial is the empty vector and equality is structural.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(const Rational& constant);
  QPolynomial(long constant) : QPolynomial(Rational(constant)) {}
  explicit QPolynomial(std::vector<Rational> coeffs);
  QPolynomial(std::initializer_list<long> coeffs);

  static QPolynomial monomial(const Rational& c, int degree);
  static QPolynomial q() { return monomial(1, 1); }
  /// q^k - 1 for k >= 0.
  static QPolynomial q_power_minus_one(int k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const;
  /// Coefficient of q^i; zero outside the stored range.
  Rational coefficient(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }
  /// Lowest i with a nonzero coefficient (the q-adic valuation); 0 for zero.
  int valuation() const noexcept;
  bool has_integer_coefficients() const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  QPolynomial& operator*=(const Rational& c);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(QPolynomial a, const Rational& c) { return a *= c; }
  friend QPolynomial operator*(const Rational& c, QPolynomial a) { return a *= c; }
  QPolynomial operator-() const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// Multiply by q^k (k may be negative if the low coefficients vanish).
  QPolynomial shifted(int k) const;
  /// q -> q^i.
  QPolynomial adams(int i) const;
  QPolynomial monic() const;
  Rational evaluate(const Rational& v) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

QPolynomial pow(const QPolynomial& base, unsigned exponent);

/// Division with remainder over Q[q]. Throws DivisionByZero for a zero divisor.
std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b);
/// a / b, throwing InexactDivision when the remainder is nonzero.
QPolynomial exact_quotient(const QPolynomial& a, const QPolynomial& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
QPolynomial gcd(const QPolynomial& a, const QPolynomial& b);

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

}  // namespace genpoly
