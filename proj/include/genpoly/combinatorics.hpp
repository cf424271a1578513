#pragma once

#include "genpoly/qpolynomial.hpp"
#include "genpoly/qrational_function.hpp"
#include "genpoly/upolynomial.hpp"

namespace genpoly {

/// Gaussian binomial [a choose b]_q = prod_{i<b} (q^(a-i) - 1) / prod_{i=1..b} (q^i - 1).
///
/// Any integer a is accepted; negative powers of q are cleared into the
/// rational function. Throws InvalidArgument for b < 0.
QRationalFunction gaussian_binomial(int a, int b);

/// [a]_q = 1 + q + ... + q^(a-1).
QPolynomial q_integer(int a);

/// prod_{i=0}^{r-1} (x - q^i); 1 for r = 0.
QRationalFunction falling_q_product(const QRationalFunction& x, int r);
UPolynomial falling_q_product(const UPolynomial& x, int r);

/// (q - 1)(q^2 - 1)...(q^n - 1); 1 for n = 0.
QPolynomial q_factorial_minus(int n);

/// Number-theoretic Moebius function by trial division. Throws for n < 1.
int moebius(long n);

/// |PGL_d(F_q)| = (q^d - 1)(q^d - q)...(q^d - q^(d-1)) / (q - 1).
QPolynomial pgl_order(int d);

/// (q - 1) / ((q^d - 1)(q^d - q)...(q^d - q^(d-1))) = 1 / pgl_order(d).
QRationalFunction orbit_prefactor(int d);

/// <u choose l>_q = prod_{i=1}^{l} (q^(1-i) u - 1) / (q^i - 1).
UPolynomial mahler_basis_element(int l);

/// Exact evaluation at q = v. The rational-function overload throws
/// PoleAtEvaluationPoint when the reduced denominator vanishes at v.
inline Rational evaluate_at_q(const QPolynomial& p, const Rational& v) { return p.evaluate(v); }
inline Rational evaluate_at_q(const QRationalFunction& f, const Rational& v) { return f.evaluate(v); }

}  // namespace genpoly
