#include "genpoly/counting.hpp"

#include <map>
#include <mutex>
#include <string>

#include "genpoly/combinatorics.hpp"
#include "genpoly/error.hpp"

namespace genpoly {

namespace {

// Results are deterministic, so a process-wide cache keyed by the inputs is safe
// to share between callers.
template <typename Key, typename Value>
class Memo {
 public:
  template <typename Compute>
  Value get(const Key& key, Compute compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    Value value = compute();
    std::lock_guard lock(mutex_);
    return values_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> values_;
};

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

QRationalFunction one_minus_q() { return QRationalFunction(QPolynomial{1, -1}); }

// 1 / ((1-q)(1-q^2)...(1-q^d))
QRationalFunction inverse_q_pochhammer(int d) {
  QPolynomial den(1);
  for (int i = 1; i <= d; ++i) den *= -QPolynomial::q_power_minus_one(i);
  return QRationalFunction(QPolynomial(1), den);
}

std::string label(char family, int d, int m) {
  return std::string(1, family) + "_" + std::to_string(d) + "^(" + std::to_string(m) + ")";
}

TruncatedSeries<QRationalFunction> ai_series_uncached(int m, int order) {
  TruncatedSeries<QRationalFunction> f(order);
  for (int d = 0; d <= order; ++d) {
    f[d] = QRationalFunction::q_power(m * d * (d + 1) / 2) * inverse_q_pochhammer(d);
  }
  const auto twisted = twist_inverse(series_invert(f), FixedRankTwist{m});
  auto out = plethystic_log(twisted) * one_minus_q();
  for (int d = 1; d <= order; ++d) {
    require(out[d].is_polynomial() && out[d].numerator().has_integer_coefficients(),
            ErrorCode::NonPolynomialCoefficient, label('a', d, m) + " is not in Z[q]");
  }
  return out;
}

Memo<int, TruncatedSeries<QRationalFunction>>& ai_series_memo() {
  static Memo<int, TruncatedSeries<QRationalFunction>> memo;
  return memo;
}

Memo<int, TruncatedSeries<UPolynomial>>& two_variable_memo() {
  static Memo<int, TruncatedSeries<UPolynomial>> memo;
  return memo;
}

Memo<int, std::vector<GenSubspacePolynomial>>& s_poly_memo() {
  static Memo<int, std::vector<GenSubspacePolynomial>> memo;
  return memo;
}

QPolynomial falling_q_power_product(int m, int r) {
  return falling_q_product(QRationalFunction::q_power(m), r).numerator();
}

}  // namespace

TruncatedSeries<QRationalFunction> compute_ai_generating_series(int m, int order) {
  require(m >= 0, ErrorCode::InvalidArgument, "m must be nonnegative");
  require(order >= 1, ErrorCode::InvalidArgument, "truncation order must be at least 1");
  // Keyed by (m, order) packed into one int; both stay far below 2^16 here.
  return ai_series_memo().get(m * 65536 + order, [&] { return ai_series_uncached(m, order); });
}

AiPolynomial ai_polynomial(int d, int m) {
  require(d >= 1, ErrorCode::InvalidArgument, "d must be positive");
  return {d, m, compute_ai_generating_series(m, d)[d].numerator()};
}

std::vector<GenSubspacePolynomial> compute_s_polys(int d) {
  require(d >= 1, ErrorCode::InvalidArgument, "d must be positive");
  return s_poly_memo().get(d, [d] {
    const int n = d * d;
    const QPolynomial pgl = pgl_order(d);
    std::vector<GenSubspacePolynomial> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
      QPolynomial rhs = pgl * ai_polynomial(d, m).value;
      for (int r = 0; r < m; ++r) rhs -= falling_q_power_product(m, r) * out[static_cast<std::size_t>(r)].value;
      const QPolynomial diagonal = falling_q_power_product(m, m);
      auto [quot, rem] = divmod(rhs, diagonal);
      require(rem.is_zero() && quot.has_integer_coefficients(), ErrorCode::NonPolynomialResult, label('s', d, m));
      out.push_back({d, m, std::move(quot)});
    }
    return out;
  });
}

GenSubspacePolynomial compute_s_poly_closed_form(int d, int m) {
  require(d >= 1, ErrorCode::InvalidArgument, "d must be positive");
  require(m >= 1 && m <= d * d, ErrorCode::InvalidArgument, "closed form needs 1 <= m <= d^2");
  // q^(d(d-1)/2) (q^d-1)...(q^2-1) is pgl_order(d).
  const QPolynomial pgl = pgl_order(d);
  QRationalFunction sum;
  for (int r = 0; r <= m; ++r) {
    const QPolynomial& a = ai_polynomial(d, r).value;
    if (a.is_zero()) continue;
    const QRationalFunction sign((m - r) % 2 == 0 ? 1 : -1);
    const QRationalFunction weight(pgl * a, q_factorial_minus(r) * q_factorial_minus(m - r));
    sum += sign * QRationalFunction::q_power(r * (r + 1) / 2 - m * r) * weight;
  }
  require(sum.is_polynomial() && sum.numerator().has_integer_coefficients(), ErrorCode::NonPolynomialResult,
          label('s', d, m));
  return {d, m, sum.numerator()};
}

QPolynomial ai_from_s_polys(int d, int m) {
  const auto s = compute_s_polys(d);
  QPolynomial sum;
  for (int r = 0; r <= std::min(m, d * d); ++r) {
    sum += falling_q_power_product(m, r) * s[static_cast<std::size_t>(r)].value;
  }
  return exact_quotient(sum, pgl_order(d));
}

int r_degree_bound(int d, int m) { return m * (d * d - m) - (m - 1) * (d - 1); }

QPolynomial compute_r_poly(int d, int m) {
  require(d >= 1 && m >= 0 && m <= d * d, ErrorCode::InvalidArgument, "r_d^(m) needs 0 <= m <= d^2");
  const QPolynomial r = gaussian_binomial(d * d, m).numerator() - compute_s_polys(d)[static_cast<std::size_t>(m)].value;
  require(r.is_zero() || r.degree() <= r_degree_bound(d, m), ErrorCode::DegreeBoundViolated,
          label('r', d, m) + " has degree " + std::to_string(r.degree()));
  return r;
}

TruncatedSeries<UPolynomial> compute_a_two_variable_series(int order) {
  require(order >= 1, ErrorCode::InvalidArgument, "truncation order must be at least 1");
  return two_variable_memo().get(order, [order] {
    TruncatedSeries<UPolynomial> f(order);
    for (int d = 0; d <= order; ++d) f[d] = UPolynomial::monomial(inverse_q_pochhammer(d), d * (d + 1) / 2);
    const auto twisted = twist_inverse(series_invert(f), TwoVariableTwist{});
    return plethystic_log(twisted) * one_minus_q();
  });
}

UPolynomial a_two_variable_from_s(int d) {
  const auto s = compute_s_polys(d);
  UPolynomial sum;
  for (int r = 0; r <= d * d; ++r) {
    sum += falling_q_product(UPolynomial::u(), r) * QRationalFunction(s[static_cast<std::size_t>(r)].value);
  }
  return sum * orbit_prefactor(d);
}

TwoVariableAi compute_a_two_variable(int d) {
  require(d >= 1, ErrorCode::InvalidArgument, "d must be positive");
  UPolynomial value = compute_a_two_variable_series(d)[d];
  require(value == a_two_variable_from_s(d), ErrorCode::RouteMismatch, "a_" + std::to_string(d) + "(q,u)");
  TwoVariableAi out{d, std::move(value), std::nullopt};
  if (d >= 2) out.factored = TwoVariableFactorization{orbit_prefactor(d), d, extract_factorization(d).reduced};
  return out;
}

MahlerExpansion compute_mahler_expansion(int d) {
  const auto s = compute_s_polys(d);
  const QRationalFunction prefactor = orbit_prefactor(d);
  MahlerExpansion out{d, {}};
  for (int r = 0; r <= d * d; ++r) {
    const QPolynomial scaled =
        s[static_cast<std::size_t>(r)].value * QPolynomial::monomial(1, r * (r - 1) / 2) * q_factorial_minus(r);
    const QRationalFunction c = prefactor * QRationalFunction(scaled);
    require(c.is_polynomial() && c.numerator().has_integer_coefficients(), ErrorCode::NonIntegralMahlerCoefficient,
            "c_" + std::to_string(r) + " for d = " + std::to_string(d));
    out.coefficients.push_back(c.numerator());
  }
  return out;
}

UPolynomial reconstruct(const MahlerExpansion& expansion) {
  UPolynomial sum;
  for (std::size_t l = 0; l < expansion.coefficients.size(); ++l) {
    if (expansion.coefficients[l].is_zero()) continue;
    sum += mahler_basis_element(static_cast<int>(l)) * QRationalFunction(expansion.coefficients[l]);
  }
  return sum;
}

FactorizationResult extract_factorization(int d) {
  require(d >= 2, ErrorCode::InvalidArgument, "factorization needs d >= 2");
  const UPolynomial a = compute_a_two_variable_series(d)[d];
  const UPolynomial divisor =
      UPolynomial::monomial(orbit_prefactor(d), d) * falling_q_product(UPolynomial::u(), 2);
  auto [reduced, rem] = divmod(a, divisor);
  require(rem.is_zero(), ErrorCode::InexactDivision, "a_" + std::to_string(d) + "(q,u) by u^d(u-1)(u-q)");
  bool ok = reduced.degree() == d * d - d - 2;
  for (int r = 0; ok && r <= d - 2; ++r) {
    ok = reduced.coefficient(d * d - d - 2 - r) == QRationalFunction(q_integer(r + 1));
  }
  return {std::move(reduced), ok};
}

QRationalFunction constant_term_formula(int d) {
  QRationalFunction sum;
  for (int i = 1; i <= d; ++i) {
    if (d % i != 0) continue;
    const int mu = moebius(i);
    if (mu == 0) continue;
    const int j = d / i;
    sum += QRationalFunction(QPolynomial(mu), pow(QPolynomial::q_power_minus_one(i), static_cast<unsigned>(j)));
  }
  const QPolynomial front = QPolynomial::monomial(Rational(1, d), (d + 1) * (d - 2) / 2) * q_factorial_minus(d);
  return QRationalFunction(front) * sum;
}

ConstantTermResult constant_term_check(int d) {
  const FactorizationResult f = extract_factorization(d);
  ConstantTermResult out{f.reduced.coefficient(0), constant_term_formula(d), Rational(0)};
  require(out.lhs == out.rhs, ErrorCode::ConstantTermMismatch, "d = " + std::to_string(d));
  out.at_q1 = out.lhs.evaluate(Rational(1));
  return out;
}

bool boundary_check(int d) {
  require(d >= 2, ErrorCode::InvalidArgument, "boundary check needs d >= 2");
  const auto s = compute_s_polys(d);
  for (int r = 0; r <= d - 2; ++r) {
    if (!(QRationalFunction(s[static_cast<std::size_t>(d * d - r)].value) == gaussian_binomial(d * d, r))) return false;
  }
  return true;
}

}  // namespace genpoly
