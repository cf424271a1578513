#pragma once

#include <optional>
#include <vector>

#include "genpoly/qpolynomial.hpp"
#include "genpoly/qrational_function.hpp"
#include "genpoly/truncated_series.hpp"
#include "genpoly/upolynomial.hpp"

namespace genpoly {

/// a_d^(m)(q): isomorphism classes of d-dimensional absolutely irreducible
/// representations of the free algebra on m generators.
struct AiPolynomial {
  int d;
  int m;
  QPolynomial value;
};

/// s_d^(m)(q): m-dimensional subspaces generating M_d as a unital algebra.
struct GenSubspacePolynomial {
  int d;
  int m;
  QPolynomial value;
};

/// a_d(q,u) = prefactor * u^d (u-1)(u-q) * reduced, for d >= 2.
struct TwoVariableFactorization {
  QRationalFunction prefactor;
  int u_power;
  UPolynomial reduced;
};

struct TwoVariableAi {
  int d;
  UPolynomial value;
  std::optional<TwoVariableFactorization> factored;
};

/// Coefficients c_l(q) of a_d(q,u) in the basis <u choose l>_q, l = 0..d^2.
struct MahlerExpansion {
  int d;
  std::vector<QPolynomial> coefficients;
};

struct FactorizationResult {
  UPolynomial reduced;
  bool leading_terms_ok;
};

struct ConstantTermResult {
  QRationalFunction lhs;
  QRationalFunction rhs;
  Rational at_q1;
};

/// sum_{d>=1} a_d^(m)(q) t^d = (1-q) Log(T^{-1} F(t)^{-1}) up to t^order.
/// Throws NonPolynomialCoefficient if a coefficient is not in Z[q].
TruncatedSeries<QRationalFunction> compute_ai_generating_series(int m, int order);
AiPolynomial ai_polynomial(int d, int m);

/// s_d^(m) for m = 0..d^2 from the triangular system
///   pgl_order(d) a_d^(m) = sum_r (q^m-1)...(q^m-q^(r-1)) s_d^(r).
std::vector<GenSubspacePolynomial> compute_s_polys(int d);
/// s_d^(m) from the closed-form inversion (sum over r = 0..m).
GenSubspacePolynomial compute_s_poly_closed_form(int d, int m);
/// (1/pgl_order(d)) sum_r (q^m-1)...(q^m-q^(r-1)) s_d^(r): a_d^(m) rebuilt from the s-polynomials.
QPolynomial ai_from_s_polys(int d, int m);

/// m(d^2-m) - (m-1)(d-1).
int r_degree_bound(int d, int m);
/// r_d^(m) = [d^2 choose m]_q - s_d^(m); throws DegreeBoundViolated if the bound fails.
QPolynomial compute_r_poly(int d, int m);

/// Two-variable series sum_d a_d(q,u) t^d up to t^order.
TruncatedSeries<UPolynomial> compute_a_two_variable_series(int order);
/// a_d(q,u) = (1/pgl_order(d)) sum_r (u-1)...(u-q^(r-1)) s_d^(r).
UPolynomial a_two_variable_from_s(int d);
/// Both routes, compared exactly (RouteMismatch otherwise), plus the factored form.
TwoVariableAi compute_a_two_variable(int d);

/// Throws NonIntegralMahlerCoefficient if some c_l is not in Z[q].
MahlerExpansion compute_mahler_expansion(int d);
UPolynomial reconstruct(const MahlerExpansion& expansion);

/// Divides a_d(q,u) by (1/pgl_order(d)) u^d (u-1)(u-q); throws InexactDivision.
/// leading_terms_ok reports whether the top d-1 coefficients are [1]_q, ..., [d-1]_q.
FactorizationResult extract_factorization(int d);

/// q^((d+1)(d-2)/2) (1/d) (q^d-1)...(q-1) sum_{ij=d} mu(i)/(q^i-1)^j.
QRationalFunction constant_term_formula(int d);
/// Compares the u^0 coefficient of the reduced factor with constant_term_formula;
/// throws ConstantTermMismatch when they differ.
ConstantTermResult constant_term_check(int d);

/// s_d^(d^2-r) == [d^2 choose r]_q for r = 0..d-2.
bool boundary_check(int d);

}  // namespace genpoly
