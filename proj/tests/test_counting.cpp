#include "doctest.h"

#include <numeric>

#include "genpoly/combinatorics.hpp"
#include "genpoly/counting.hpp"
#include "genpoly/error.hpp"
#include "genpoly/expression.hpp"
#include "genpoly/golden_tables.hpp"

using namespace genpoly;

namespace {

QPolynomial P(std::string_view text) { return parse_q_polynomial(text); }
UPolynomial U(std::string_view text) { return parse_expression(text); }

QPolynomial s_poly(int d, int m) { return compute_s_polys(d)[static_cast<std::size_t>(m)].value; }

}  // namespace

TEST_CASE("a_d^(m) generating series: examples") {
  for (int m = 0; m <= 6; ++m) CHECK(ai_polynomial(1, m).value == QPolynomial::monomial(1, m));
  const auto series_m1 = compute_ai_generating_series(1, 5);
  for (int d = 2; d <= 5; ++d) CHECK(series_m1[d].is_zero());
  // u = q^2 in u^2(u-1)(u-q)/(q(q-1)(q+1))
  CHECK(ai_polynomial(2, 2).value == P("q^5-q^4"));
  CHECK(series_m1[0].is_zero());
}

TEST_CASE("a_d^(m): integrality, vanishing and degree") {
  for (int d = 1; d <= 4; ++d) {
    for (int m = 0; m <= d * d + 2; ++m) {
      const QPolynomial a = ai_polynomial(d, m).value;
      CHECK(a.has_integer_coefficients());
      if (d >= 2 && m <= 1) CHECK(a.is_zero());
      // Polynomial count of a variety of dimension (m-1)d^2 + 1.
      if (m >= 2) CHECK(a.degree() == (m - 1) * d * d + 1);
    }
  }
}

TEST_CASE("s-polynomials reproduce the published tables") {
  for (const auto& entry : golden_s_table()) {
    CAPTURE(entry.d);
    CAPTURE(entry.m);
    CHECK(s_poly(entry.d, entry.m) == P(entry.expression));
  }
  CHECK(s_poly(1, 0) == QPolynomial(1));
  for (int d = 2; d <= 4; ++d) CHECK(s_poly(d, 0).is_zero());
}

TEST_CASE("closed-form inversion agrees with the triangular solve") {
  CHECK(compute_s_poly_closed_form(2, 2).value == P("q^4"));
  CHECK(compute_s_poly_closed_form(2, 3).value == P("q^3+q^2"));
  CHECK(compute_s_poly_closed_form(3, 3).value == s_poly(3, 3));
  for (int d = 1; d <= 4; ++d) {
    const auto s = compute_s_polys(d);
    for (int m = 1; m <= d * d; ++m) CHECK(compute_s_poly_closed_form(d, m).value == s[static_cast<std::size_t>(m)].value);
  }
  CHECK_THROWS_AS(compute_s_poly_closed_form(2, 0), Error);
  CHECK_THROWS_AS(compute_s_poly_closed_form(2, 5), Error);
}

TEST_CASE("route agreement: series versus reconstruction from s-polynomials") {
  for (int d = 1; d <= 4; ++d) {
    for (int m = 0; m <= d * d; ++m) CHECK(ai_from_s_polys(d, m) == ai_polynomial(d, m).value);
  }
}

TEST_CASE("s-polynomial invariants") {
  for (int d = 2; d <= 5; ++d) {
    const auto s = compute_s_polys(d);
    for (int m = 1; m <= d - 1; ++m) CHECK(s[static_cast<std::size_t>(m)].value.evaluate(Rational(1)) == 0);
    for (const auto& entry : s) CHECK(entry.value.has_integer_coefficients());
    CHECK(boundary_check(d));
  }
  for (int d = 2; d <= 4; ++d) {
    for (int m = 2; m <= d * d; ++m) CHECK(s_poly(d, m).degree() == m * (d * d - m));
  }
}

TEST_CASE("r-polynomials") {
  // [4 choose 2]_q - q^4
  CHECK(compute_r_poly(2, 2) == P("q^3+2q^2+q+1"));
  CHECK(compute_r_poly(2, 4).is_zero());
  const QPolynomial r49 = compute_r_poly(4, 9);
  const auto golden = golden_r_4_9();
  for (std::size_t k = 0; k < golden.low_coefficients.size(); ++k) {
    CHECK(r49.coefficient(static_cast<int>(k)) == golden.low_coefficients[k]);
  }
  CHECK(r49.degree() == golden.leading_degree);
  CHECK(r49.leading() == golden.leading_coefficient);
  for (int d = 1; d <= 4; ++d) {
    for (int m = 1; m <= d * d; ++m) {
      const QPolynomial r = compute_r_poly(d, m);
      CHECK((r.is_zero() || r.degree() <= r_degree_bound(d, m)));
      CHECK(r.has_integer_coefficients());
    }
  }
  CHECK_THROWS_AS(compute_r_poly(2, 5), Error);
}

TEST_CASE("two-variable a_d(q,u): published examples for d <= 3") {
  for (const auto& entry : golden_a_two_variable()) {
    if (entry.d > 3) continue;
    CAPTURE(entry.d);
    CHECK(compute_a_two_variable(entry.d).value == U(entry.expression));
  }
}

TEST_CASE("two-variable a_4(q,u): published form differs only in a repeated u^2 coefficient") {
  const auto a4 = compute_a_two_variable(4);
  const UPolynomial printed = U(golden_a_two_variable()[3].expression);
  const UPolynomial frame = UPolynomial::monomial(orbit_prefactor(4), 4) * U("(u-1)(u-q)");
  const UPolynomial expected_gap = frame * U("-q^5(q^2+1)(q^2+q+1)u^2");
  CHECK(printed - a4.value == expected_gap);
  // The printed form is not an integer polynomial at u = q^2, so it cannot be a_4^(2).
  CHECK_FALSE(printed.substitute(QRationalFunction::q_power(2)).is_polynomial());
  CHECK(a4.value.substitute(QRationalFunction::q_power(2)) == QRationalFunction(ai_polynomial(4, 2).value));
}

TEST_CASE("two-variable specialization and divisibility") {
  for (int d = 1; d <= 4; ++d) {
    const UPolynomial a = compute_a_two_variable(d).value;
    for (int m = 0; m <= d * d + 2; ++m) {
      CHECK(a.substitute(QRationalFunction::q_power(m)) == QRationalFunction(ai_polynomial(d, m).value));
    }
  }
  for (int d = 1; d <= 5; ++d) {
    const UPolynomial a = compute_a_two_variable_series(d)[d];
    CHECK(a.valuation() >= d);
    CHECK(a.degree() == d * d);
  }
}

TEST_CASE("Mahler expansion") {
  const MahlerExpansion e1 = compute_mahler_expansion(1);
  CHECK(reconstruct(e1) == UPolynomial::u());
  const MahlerExpansion e2 = compute_mahler_expansion(2);
  // prefactor(2) q^4 q (q^2-1)(q-1) = q^4 (q-1)
  CHECK(e2.coefficients[2] == P("q^5-q^4"));
  CHECK(reconstruct(e2) == U("u^2(u-1)(u-q)/(q(q-1)(q+1))"));
  for (int d = 1; d <= 4; ++d) {
    const MahlerExpansion e = compute_mahler_expansion(d);
    CHECK(e.coefficients.size() == static_cast<std::size_t>(d * d + 1));
    for (const auto& c : e.coefficients) CHECK(c.has_integer_coefficients());
    CHECK(reconstruct(e) == compute_a_two_variable(d).value);
  }
}

TEST_CASE("factorization of a_d(q,u)") {
  const FactorizationResult f2 = extract_factorization(2);
  CHECK(f2.reduced == UPolynomial(1));
  CHECK(f2.leading_terms_ok);
  const FactorizationResult f3 = extract_factorization(3);
  CHECK(f3.reduced == U("(u+q)(u^3+u^2-(q+1)^2u+q^2(q+1))"));
  CHECK(f3.leading_terms_ok);
  const FactorizationResult f4 = extract_factorization(4);
  CHECK(f4.reduced.degree() == 10);
  CHECK(f4.reduced.coefficient(10) == QRationalFunction(1));
  CHECK(f4.reduced.coefficient(9) == QRationalFunction(P("q+1")));
  CHECK(f4.reduced.coefficient(8) == QRationalFunction(P("q^2+q+1")));
  CHECK(f4.leading_terms_ok);
  CHECK(extract_factorization(5).leading_terms_ok);
  const auto a3 = compute_a_two_variable(3);
  REQUIRE(a3.factored.has_value());
  CHECK(a3.factored->u_power == 3);
  CHECK(!compute_a_two_variable(1).factored.has_value());
  CHECK_THROWS_AS(extract_factorization(1), Error);
}

TEST_CASE("constant term of the reduced factor") {
  CHECK(constant_term_check(2).lhs == QRationalFunction(1));
  long factorial = 1;
  for (int d = 2; d <= 5; ++d) {
    factorial *= d - 1;
    const ConstantTermResult r = constant_term_check(d);
    CHECK(r.lhs == r.rhs);
    CHECK(r.at_q1 == factorial);
  }
}
