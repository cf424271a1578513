#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "genpoly/qrational_function.hpp"

namespace genpoly {

/// Polynomial in u with coefficients in Q(q); home of the two-variable a_d(q,u).
class UPolynomial {
 public:
  UPolynomial() = default;
  UPolynomial(const QRationalFunction& constant);
  UPolynomial(long constant) : UPolynomial(QRationalFunction(constant)) {}
  explicit UPolynomial(std::vector<QRationalFunction> coeffs);

  static UPolynomial zero() { return {}; }
  static UPolynomial one() { return UPolynomial(1); }
  static UPolynomial u() { return monomial(1, 1); }
  static UPolynomial monomial(const QRationalFunction& c, int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  QRationalFunction coefficient(int k) const;
  const QRationalFunction& leading() const { return coeffs_.back(); }
  std::span<const QRationalFunction> coefficients() const noexcept { return coeffs_; }
  /// Lowest k with a nonzero coefficient; 0 for zero.
  int valuation() const noexcept;

  UPolynomial& operator+=(const UPolynomial& rhs);
  UPolynomial& operator-=(const UPolynomial& rhs);
  UPolynomial& operator*=(const UPolynomial& rhs);
  UPolynomial& operator*=(const QRationalFunction& c);

  friend UPolynomial operator+(UPolynomial a, const UPolynomial& b) { return a += b; }
  friend UPolynomial operator-(UPolynomial a, const UPolynomial& b) { return a -= b; }
  friend UPolynomial operator*(const UPolynomial& a, const UPolynomial& b);
  friend UPolynomial operator*(UPolynomial a, const QRationalFunction& c) { return a *= c; }
  friend UPolynomial operator*(const QRationalFunction& c, UPolynomial a) { return a *= c; }
  UPolynomial operator-() const;

  friend bool operator==(const UPolynomial&, const UPolynomial&) = default;

  /// q -> q^i and u -> u^i.
  UPolynomial adams(int i) const;
  /// Substitute u := x.
  QRationalFunction substitute(const QRationalFunction& x) const;
  /// Monic lcm of the coefficient denominators.
  QPolynomial common_denominator() const;

 private:
  void trim();
  std::vector<QRationalFunction> coeffs_;
};

/// Division with remainder in Q(q)[u].
std::pair<UPolynomial, UPolynomial> divmod(const UPolynomial& a, const UPolynomial& b);

inline UPolynomial adams(const UPolynomial& x, int i) { return x.adams(i); }
/// Inverse of a unit of Q(q)[u] (a nonzero constant).
UPolynomial ring_inverse(const UPolynomial& x);

std::ostream& operator<<(std::ostream& os, const UPolynomial& p);

}  // namespace genpoly
