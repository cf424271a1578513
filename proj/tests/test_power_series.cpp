#include "doctest.h"

#include "genpoly/error.hpp"
#include "genpoly/expression.hpp"
#include "genpoly/truncated_series.hpp"
#include "genpoly/random_algebra.hpp"

using namespace genpoly;
using genpoly::testing::RandomAlgebra;

namespace {

using QSeries = TruncatedSeries<QRationalFunction>;
using USeries = TruncatedSeries<UPolynomial>;

QRationalFunction R(const char* text) { return parse_expression(text).coefficient(0); }
UPolynomial U(const char* text) { return parse_expression(text); }

QSeries series(int order, std::initializer_list<const char*> coeffs) {
  std::vector<QRationalFunction> c;
  for (const char* text : coeffs) c.push_back(R(text));
  return QSeries(order, std::move(c));
}

QSeries random_series(RandomAlgebra& gen, int order, bool zero_constant) {
  QSeries s(order);
  for (int d = 0; d <= order; ++d) s[d] = gen.rational_function();
  s[0] = zero_constant ? QRationalFunction() : QRationalFunction(1);
  return s;
}

USeries random_u_series(RandomAlgebra& gen, int order) {
  USeries s(order);
  for (int d = 1; d <= order; ++d) s[d] = gen.u_polynomial(1);
  return s;
}

// Exp by solving Log(f) = g one coefficient at a time: the t^n coefficient of
// Log(f) is f_n plus terms in f_1..f_{n-1}.
template <typename R>
TruncatedSeries<R> exp_by_inverting_log(const TruncatedSeries<R>& g) {
  auto f = TruncatedSeries<R>::one(g.order());
  for (int n = 1; n <= g.order(); ++n) {
    const auto current = plethystic_log(f);
    f[n] = f[n] + (g[n] - current[n]);
  }
  return f;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("series_invert") {
  CHECK(series_invert(series(3, {"1", "-1"})) == series(3, {"1", "1", "1", "1"}));
  CHECK(series_invert(QSeries::one(5)) == QSeries::one(5));
  // F(t) for m = 1 up to t^2: 1 + q t/(1-q) + q^3 t^2/((1-q)(1-q^2)).
  const QSeries f = series(2, {"1", "q/(1-q)", "q^3/((1-q)(1-q^2))"});
  const QSeries expected = series(2, {"1", "-q/(1-q)", "q^2/(1-q)^2 - q^3/((1-q)(1-q^2))"});
  CHECK(series_invert(f) == expected);
  CHECK(series_invert(f) * f == QSeries::one(2));
  CHECK(code_of([] { series_invert(series(3, {"0", "1"})); }) == ErrorCode::NonInvertibleConstantTerm);
}

TEST_CASE("series_log") {
  CHECK(series_log(series(3, {"1", "1"})) == series(3, {"0", "1", "-1/2", "1/3"}));
  CHECK(series_log(series_invert(series(3, {"1", "-1"}))) == series(3, {"0", "1", "1/2", "1/3"}));
  // log(1 - z/(1-q)) = -sum_j z^j / (j (1-q)^j)
  QSeries expected(4);
  for (int j = 1; j <= 4; ++j) expected[j] = -pow(R("1-q"), -j) * QRationalFunction(Rational(1, j));
  CHECK(series_log(series(4, {"1", "-1/(1-q)"})) == expected);
  CHECK(code_of([] { series_log(series(3, {"2", "1"})); }) == ErrorCode::ConstantTermNotOne);
}

TEST_CASE("series_exp inverts series_log") {
  RandomAlgebra gen(3);
  for (int trial = 0; trial < 10; ++trial) {
    const QSeries g = random_series(gen, 5, true);
    CHECK(series_log(series_exp(g)) == g);
  }
}

TEST_CASE("plethystic_log examples") {
  CHECK(plethystic_log(series_invert(series(4, {"1", "-1"}))) == series(4, {"0", "1"}));
  CHECK(plethystic_log(series_invert(series(4, {"1", "-q"}))) == series(4, {"0", "q"}));
  const QSeries product = series_invert(series(4, {"1", "-1"})) * series_invert(series(4, {"1", "-q"}));
  CHECK(plethystic_log(product) == series(4, {"0", "1+q"}));
}

TEST_CASE("plethystic_exp examples") {
  CHECK(plethystic_exp(series(5, {"0", "1"})) == series(5, {"1", "1", "1", "1", "1", "1"}));
  CHECK(plethystic_exp(QSeries(5)) == QSeries::one(5));
  CHECK(plethystic_exp(series(5, {"0", "0", "q"})) == series(5, {"1", "0", "q", "0", "q^2"}));
  CHECK(code_of([] { plethystic_exp(series(3, {"1", "1"})); }) == ErrorCode::ConstantTermNotZero);
}

TEST_CASE("Exp/Log round trips on random series") {
  RandomAlgebra gen(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const QSeries g = random_series(gen, 6, true);
    const QSeries f = plethystic_exp(g);
    CHECK(plethystic_log(f) == g);
    if (trial < 10) CHECK(f == exp_by_inverting_log(g));
  }
}

TEST_CASE("Exp is a homomorphism") {
  RandomAlgebra gen(77);
  for (int trial = 0; trial < 10; ++trial) {
    const QSeries g1 = random_series(gen, 6, true);
    const QSeries g2 = random_series(gen, 6, true);
    CHECK(plethystic_exp(g1 + g2) == plethystic_exp(g1) * plethystic_exp(g2));
  }
}

TEST_CASE("Exp generator axiom over Q(q)[u]") {
  const int order = 6;
  for (int i = 0; i <= 3; ++i) {
    for (int n = 0; n <= 3; ++n) {
      for (int d = 1; d <= 3; ++d) {
        const UPolynomial mono = UPolynomial::monomial(QRationalFunction::q_power(i), n);
        const USeries g = USeries::monomial(mono, d, order);
        CHECK(plethystic_exp(g) == series_invert(USeries::one(order) - g));
      }
    }
  }
}

TEST_CASE("Exp/Log over Q(q)[u]: round trip and both routes") {
  RandomAlgebra gen(8);
  for (int trial = 0; trial < 5; ++trial) {
    const USeries g = random_u_series(gen, 4);
    const USeries f = plethystic_exp(g);
    CHECK(plethystic_log(f) == g);
    CHECK(f == exp_by_inverting_log(g));
  }
}

TEST_CASE("Adams operations are ring homomorphisms") {
  RandomAlgebra gen(41);
  for (int trial = 0; trial < 10; ++trial) {
    const QSeries f = random_series(gen, 6, false);
    const QSeries g = random_series(gen, 6, false);
    for (int i = 1; i <= 3; ++i) {
      CHECK(adams(f * g, i) == adams(f, i) * adams(g, i));
      CHECK(adams(f + g, i) == adams(f, i) + adams(g, i));
    }
  }
  for (int trial = 0; trial < 4; ++trial) {
    USeries f = random_u_series(gen, 4);
    USeries g = random_u_series(gen, 4);
    f[0] = UPolynomial(1);
    g[0] = U("u+q");
    CHECK(adams(f * g, 2) == adams(f, 2) * adams(g, 2));
  }
}

TEST_CASE("twist") {
  CHECK(twist(series(2, {"1", "1", "1"}), FixedRankTwist{1}) == series(2, {"1", "-1", "1"}));
  CHECK(twist(series(3, {"0", "0", "1"}), FixedRankTwist{3}) == series(3, {"0", "0", "1/q^2"}));

  USeries f(3);
  f[2] = UPolynomial::u();
  USeries expected(3);
  expected[2] = UPolynomial(QRationalFunction::q());
  CHECK(twist(f, TwoVariableTwist{}) == expected);
  CHECK(twist(f, TwistVariant{TwoVariableTwist{}}) == expected);
  USeries not_divisible(3);
  not_divisible[2] = UPolynomial(1);
  CHECK(code_of([&] { twist(not_divisible, TwoVariableTwist{}); }) == ErrorCode::NotAPolynomial);

  RandomAlgebra gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const QSeries s = random_series(gen, 6, false);
    const int m = gen.uniform(0, 4);
    CHECK(twist_inverse(twist(s, FixedRankTwist{m}), FixedRankTwist{m}) == s);
    CHECK(twist(twist_inverse(s, FixedRankTwist{m}), FixedRankTwist{m}) == s);
  }
  for (int trial = 0; trial < 5; ++trial) {
    const USeries s = random_u_series(gen, 5);
    CHECK(twist(twist_inverse(s, TwoVariableTwist{}), TwoVariableTwist{}) == s);
  }
}

TEST_CASE("two-variable twist specializes to the fixed-rank twist") {
  RandomAlgebra gen(13);
  for (int m = 0; m <= 4; ++m) {
    const QRationalFunction u_value = QRationalFunction::q_power(m);
    for (int trial = 0; trial < 3; ++trial) {
      const USeries s = random_u_series(gen, 5);
      CHECK(substitute_u(twist_inverse(s, TwoVariableTwist{}), u_value) ==
            twist_inverse(substitute_u(s, u_value), FixedRankTwist{m}));
      // Forward twist on an input divisible by the needed powers of u.
      const USeries lifted = twist_inverse(s, TwoVariableTwist{});
      CHECK(substitute_u(twist(lifted, TwoVariableTwist{}), u_value) ==
            twist(substitute_u(lifted, u_value), FixedRankTwist{m}));
    }
  }
}

TEST_CASE("twisted_product") {
  RandomAlgebra gen(17);
  const QSeries f = random_series(gen, 5, false);
  const QSeries g = random_series(gen, 5, false);
  CHECK(twisted_product(f, g, 1) == f * g);
  CHECK(twisted_product(series(3, {"0", "1"}), series(3, {"0", "1"}), 2) == series(3, {"0", "0", "q"}));
  for (int m = 0; m <= 3; ++m) {
    for (int trial = 0; trial < 5; ++trial) {
      const QSeries a = random_series(gen, 5, false);
      const QSeries b = random_series(gen, 5, false);
      CHECK(twist(twisted_product(a, b, m), FixedRankTwist{m}) ==
            twist(a, FixedRankTwist{m}) * twist(b, FixedRankTwist{m}));
    }
  }
}

TEST_CASE("truncation bookkeeping") {
  const QSeries s = series(4, {"1", "2", "3", "4", "5"});
  CHECK(s.truncated(2) == series(2, {"1", "2", "3"}));
  CHECK_THROWS_AS(s.truncated(5), Error);
  CHECK_THROWS_AS(s + series(3, {"1"}), Error);
  CHECK(QSeries::monomial(R("q"), 7, 4) == QSeries(4));
}
