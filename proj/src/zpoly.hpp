#pragma once

// Integer-coefficient polynomial kernels used behind QPolynomial.

#include <utility>
#include <vector>

#include "genpoly/qpolynomial.hpp"
#include "genpoly/rational.hpp"

namespace genpoly::detail {

using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p);
ZPoly multiply(const ZPoly& a, const ZPoly& b);
BigInt evaluate(const ZPoly& p, const BigInt& x);
BigInt content(const ZPoly& p);
/// Divide out the content and make the leading coefficient positive.
ZPoly primitive_part(ZPoly p);
/// If b divides a in Z[q], store the quotient and return true.
bool divides(const ZPoly& a, const ZPoly& b, ZPoly* quotient);
/// Primitive gcd of two nonzero primitive polynomials (positive leading coefficient).
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Split p = scale * z with z primitive in Z[q]; p must be nonzero.
std::pair<ZPoly, Rational> integer_form(const QPolynomial& p);
/// Clear denominators: p = z / den with den the lcm of the coefficient denominators.
std::pair<ZPoly, BigInt> cleared_form(const QPolynomial& p);
QPolynomial from_integer(const ZPoly& z, const Rational& scale);

}  // namespace genpoly::detail
