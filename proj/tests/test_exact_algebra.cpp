#include "doctest.h"

#include "genpoly/combinatorics.hpp"
#include "genpoly/error.hpp"
#include "genpoly/expression.hpp"
#include "genpoly/random_algebra.hpp"

using namespace genpoly;
using genpoly::testing::RandomAlgebra;

namespace {

QPolynomial P(const char* text) { return parse_q_polynomial(text); }
QRationalFunction R(const char* text) { return parse_expression(text).coefficient(0); }
UPolynomial U(const char* text) { return parse_expression(text); }

BigInt binomial(int n, int k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

TEST_CASE("QPolynomial basics") {
  const QPolynomial p{1, 0, 3};
  CHECK(p.degree() == 2);
  CHECK(QPolynomial{}.degree() == -1);
  CHECK(QPolynomial{0, 0, 0}.is_zero());
  CHECK(QPolynomial{0, 0, 0} == QPolynomial{});
  CHECK(p.coefficient(7) == 0);
  CHECK(to_plain(P("q^3+q^2")) == "q^3+q^2");
  CHECK(to_plain(P("2q^39 - q^4 + 1")) == "2*q^39-q^4+1");
  CHECK(to_latex(P("q^14+q^13-q^11-q^10")) == "q^{14} + q^{13} - q^{11} - q^{10}");
  CHECK(P("q^2").shifted(-2) == QPolynomial(1));
  CHECK_THROWS_AS(P("q+1").shifted(-1), Error);
  CHECK(P("q^2+1").adams(3) == P("q^6+1"));
}

TEST_CASE("QPolynomial ring axioms on random inputs") {
  RandomAlgebra gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    const QPolynomial a = gen.polynomial(), b = gen.polynomial(), c = gen.polynomial();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QPolynomial{});
    CHECK(a * QPolynomial(1) == a);
    const Rational v = gen.rational();
    CHECK((a * b).evaluate(v) == a.evaluate(v) * b.evaluate(v));
  }
}

TEST_CASE("division and gcd") {
  const QPolynomial a = P("(q^2-1)(q+2)");
  const QPolynomial b = P("(q-1)(q+3)");
  CHECK(gcd(a, b) == P("q-1"));
  CHECK(gcd(a, QPolynomial{}) == a.monic());
  CHECK(gcd(P("q^5+q^3"), P("q^2")) == P("q^2"));
  CHECK(exact_quotient(a, P("q+1")) == P("(q-1)(q+2)"));
  CHECK_THROWS_AS(exact_quotient(a, P("q+5")), Error);
  try {
    (void)exact_quotient(a, P("q+5"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InexactDivision);
  }

  RandomAlgebra gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    const QPolynomial x = gen.nonzero_polynomial(), y = gen.nonzero_polynomial();
    const QPolynomial c = gen.nonzero_polynomial(4);
    auto [quot, rem] = divmod(x, y);
    CHECK(quot * y + rem == x);
    CHECK(rem.degree() < y.degree());
    const QPolynomial g = gcd(x * c, y * c);
    CHECK(g == (gcd(x, y) * c).monic());
    CHECK(divmod(x * c, g).second.is_zero());
  }

  // Large coefficients stress the evaluation-based gcd.
  const QPolynomial big = P("(1234567891011q^3 - 98765432123q + 5)(q^4 - 3q + 77777777777)");
  CHECK(gcd(big, P("(q^4 - 3q + 77777777777)(q - 2)^3")) == P("q^4 - 3q + 77777777777"));
}

TEST_CASE("QRationalFunction canonical form") {
  const QRationalFunction f(P("q^2-1"), P("2q-2"));
  CHECK(f.is_polynomial());
  CHECK(f == QRationalFunction(P("q+1") * Rational(1, 2)));
  const QRationalFunction g(P("3q"), P("6q^2+6"));
  CHECK(g.denominator() == P("q^2+1"));
  CHECK(g.numerator() == P("q") * Rational(1, 2));
  CHECK_THROWS_AS(QRationalFunction(P("q"), QPolynomial{}), Error);

  // The same quotient assembled through different factor orders is structurally identical.
  RandomAlgebra gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    const QPolynomial a1 = gen.nonzero_polynomial(3), a2 = gen.nonzero_polynomial(3);
    const QPolynomial b1 = gen.nonzero_polynomial(3), b2 = gen.nonzero_polynomial(3);
    const QRationalFunction x = QRationalFunction(a1, b1) * QRationalFunction(a2, b2);
    const QRationalFunction y = QRationalFunction(a2, b1) * QRationalFunction(a1, b2);
    const QRationalFunction z(a1 * a2, b2 * b1);
    CHECK(x == y);
    CHECK(x == z);
    CHECK(gcd(x.numerator(), x.denominator()).is_one());
    CHECK(x.denominator().leading() == 1);
  }
}

TEST_CASE("QRationalFunction field axioms on random inputs") {
  RandomAlgebra gen(29);
  for (int trial = 0; trial < 40; ++trial) {
    const QRationalFunction a = gen.rational_function(), b = gen.rational_function(), c = gen.rational_function();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inverse() == QRationalFunction(1));
    CHECK((a * b).adams(2) == a.adams(2) * b.adams(2));
    CHECK((a + b).adams(3) == a.adams(3) + b.adams(3));
  }
}

TEST_CASE("gaussian_binomial examples") {
  // (q^4-1)(q^3-1)/((q^2-1)(q-1)) = (q^2+1)(q^2+q+1)
  CHECK(gaussian_binomial(4, 2) == QRationalFunction(P("q^4+q^3+2q^2+q+1")));
  for (int a = -4; a <= 6; ++a) CHECK(gaussian_binomial(a, 0) == QRationalFunction(1));
  // (q^-1 - 1)/(q - 1) = -1/q
  CHECK(gaussian_binomial(-1, 1) == R("-1/q"));
  CHECK_THROWS_AS(gaussian_binomial(3, -1), Error);
  CHECK(gaussian_binomial(2, 3).is_zero());
}

TEST_CASE("gaussian_binomial: Pascal recurrence and q = 1 limit") {
  for (int a = 1; a <= 9; ++a) {
    for (int b = 1; b <= a; ++b) {
      const QRationalFunction lhs = gaussian_binomial(a, b);
      const QRationalFunction rhs = gaussian_binomial(a - 1, b - 1) + QRationalFunction::q_power(b) * gaussian_binomial(a - 1, b);
      CHECK(lhs == rhs);
    }
  }
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= a; ++b) {
      const QRationalFunction g = gaussian_binomial(a, b);
      REQUIRE(g.is_polynomial());
      CHECK(g.numerator().has_integer_coefficients());
      CHECK(evaluate_at_q(g.numerator(), Rational(1)) == Rational(binomial(a, b)));
      for (const auto& c : g.numerator().coefficients()) CHECK(c >= 0);
    }
  }
}

TEST_CASE("Gaussian binomial identity (1): Vandermonde") {
  for (int a1 = 0; a1 <= 6; ++a1) {
    for (int a2 = 0; a2 <= 6; ++a2) {
      for (int b = 0; b <= a1 + a2; ++b) {
        QRationalFunction sum;
        for (int b1 = 0; b1 <= b; ++b1) {
          const int b2 = b - b1;
          sum += QRationalFunction::q_power((a1 - b1) * b2) * gaussian_binomial(a1, b1) * gaussian_binomial(a2, b2);
        }
        CHECK(sum == gaussian_binomial(a1 + a2, b));
      }
    }
  }
}

TEST_CASE("Gaussian binomial identity (2): negative upper index") {
  for (int a = -6; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      const QRationalFunction sign(b % 2 == 0 ? 1 : -1);
      const QRationalFunction rhs = sign * QRationalFunction::q_power(a * b - b * (b - 1) / 2) * gaussian_binomial(-a + b - 1, b);
      CHECK(gaussian_binomial(a, b) == rhs);
    }
  }
}

TEST_CASE("Gaussian binomial identity (3): alternating sum") {
  for (int a = 0; a <= 10; ++a) {
    QRationalFunction sum;
    for (int b = 0; b <= a; ++b) {
      const QRationalFunction sign(b % 2 == 0 ? 1 : -1);
      sum += sign * QRationalFunction::q_power(b * (b - 1) / 2) * gaussian_binomial(a, b);
    }
    CHECK(sum == QRationalFunction(a == 0 ? 1 : 0));
  }
}

TEST_CASE("Gaussian binomial identity (4): q-binomial theorem") {
  for (int a = 0; a <= 10; ++a) {
    UPolynomial sum;
    for (int b = 0; b <= a; ++b) {
      const QRationalFunction sign(b % 2 == 0 ? 1 : -1);
      sum += UPolynomial::monomial(sign * QRationalFunction::q_power(b * (b - 1) / 2) * gaussian_binomial(a, b), a - b);
    }
    CHECK(falling_q_product(UPolynomial::u(), a) == sum);
  }
}

TEST_CASE("falling_q_product examples") {
  CHECK(falling_q_product(QRationalFunction(P("q^2")), 2) == QRationalFunction(P("q^4-q^3-q^2+q")));
  CHECK(falling_q_product(UPolynomial::u(), 0) == UPolynomial(1));
  CHECK(falling_q_product(UPolynomial::u(), 2) == U("u^2-(q+1)u+q"));
  CHECK(falling_q_product(QRationalFunction(P("q^3")), 4).is_zero());
}

TEST_CASE("moebius") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);
  CHECK_THROWS_AS(moebius(0), Error);
  // sum_{d | n} mu(d) = [n == 1]
  for (int n = 1; n <= 60; ++n) {
    int sum = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) sum += moebius(d);
    }
    CHECK(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("pgl_order") {
  CHECK(pgl_order(1) == QPolynomial(1));
  CHECK(pgl_order(2) == P("q^3-q"));
  CHECK(evaluate_at_q(pgl_order(2), Rational(2)) == 6);
  for (int d = 1; d <= 5; ++d) {
    QPolynomial prod(1);
    for (int i = 0; i < d; ++i) prod *= QPolynomial::monomial(1, d) - QPolynomial::monomial(1, i);
    CHECK(pgl_order(d) == exact_quotient(prod, P("q-1")));
    CHECK(pgl_order(d).degree() == d * d - 1);
  }
  // |PGL_3(F_2)| = 168
  CHECK(evaluate_at_q(pgl_order(3), Rational(2)) == 168);
}

TEST_CASE("mahler_basis_element") {
  CHECK(mahler_basis_element(0) == UPolynomial(1));
  CHECK(mahler_basis_element(1) == U("(u-1)/(q-1)"));
  CHECK(mahler_basis_element(2) == U("(u-1)(u-q)/(q(q-1)(q^2-1))"));
  for (int l = 0; l <= 6; ++l) {
    const UPolynomial e = mahler_basis_element(l);
    CHECK(e.degree() == l);
    // <q^m choose l>_q = [m choose l]_q
    for (int m = 0; m <= 7; ++m) CHECK(e.substitute(QRationalFunction::q_power(m)) == gaussian_binomial(m, l));
  }
}

TEST_CASE("evaluate_at_q") {
  CHECK(evaluate_at_q(P("q^4"), Rational(2)) == 16);
  CHECK(evaluate_at_q(P("q^3+q^2"), Rational(3)) == 36);
  const QRationalFunction reduced(P("q^2-1"), P("q-1"));
  CHECK(evaluate_at_q(reduced, Rational(1)) == 2);
  const QRationalFunction pole(P("q^2+1"), P("q-1"));
  try {
    (void)evaluate_at_q(pole, Rational(1));
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtEvaluationPoint);
  }
}

TEST_CASE("UPolynomial arithmetic") {
  RandomAlgebra gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const UPolynomial a = gen.u_polynomial(), b = gen.u_polynomial(), c = gen.u_polynomial();
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).adams(2) == a.adams(2) * b.adams(2));
    const QRationalFunction x = gen.rational_function();
    CHECK((a * b).substitute(x) == a.substitute(x) * b.substitute(x));
    if (!b.is_zero()) {
      auto [quot, rem] = divmod(a, b);
      CHECK(quot * b + rem == a);
      CHECK(rem.degree() < b.degree());
    }
  }
}

TEST_CASE("expression parser") {
  CHECK(U("u^2(u-1)(u-q)/(q(q-1)(q+1))") == U("u^2*(u-1)*(u-q)") * R("1/(q^3-q)"));
  CHECK(P("q^{14} + q^{13}") == P("q^14+q^13"));
  CHECK(R("q^(-2)") == R("1/q^2"));
  CHECK_THROWS_AS(U("1/(u-1)"), Error);
  CHECK_THROWS_AS(U("(q+1"), Error);
  CHECK_THROWS_AS(P("u+1"), Error);
  CHECK(parse_expression(to_plain(U("u^2(u-1)(u-q)/(q(q-1)(q+1))"))) == U("u^2(u-1)(u-q)/(q(q-1)(q+1))"));
}
