#pragma once

#include <algorithm>
#include <concepts>
#include <utility>
#include <variant>
#include <vector>

#include "genpoly/combinatorics.hpp"
#include "genpoly/error.hpp"
#include "genpoly/qrational_function.hpp"
#include "genpoly/upolynomial.hpp"

namespace genpoly {

/// What TruncatedSeries needs from its coefficients: a commutative ring over
/// Q(q) with Adams operations and a way to invert units.
template <typename R>
concept CoefficientRing = std::regular<R> && requires(const R a, const R b, const QRationalFunction c, int i) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a * c } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { adams(a, i) } -> std::convertible_to<R>;
  { ring_inverse(a) } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { R::one() } -> std::convertible_to<R>;
};

/// Power series in t kept up to and including t^order.
template <CoefficientRing R>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(checked_size(order)) {}
  TruncatedSeries(int order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked_size(order));
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = R::one();
    return s;
  }
  /// c * t^degree, or zero when degree exceeds the order.
  static TruncatedSeries monomial(const R& c, int degree, int order) {
    TruncatedSeries s(order);
    if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const R& operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
  R& operator[](int d) { return coeffs_.at(static_cast<std::size_t>(d)); }
  const std::vector<R>& coefficients() const noexcept { return coeffs_; }
  const R& constant_term() const { return coeffs_.front(); }

  /// Same series viewed at a lower order.
  TruncatedSeries truncated(int order) const {
    if (order > this->order()) throw Error(ErrorCode::InvalidArgument, "cannot raise truncation order");
    return TruncatedSeries(order, std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
    check_order(rhs);
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] = coeffs_[d] + rhs.coeffs_[d];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
    check_order(rhs);
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] = coeffs_[d] - rhs.coeffs_[d];
    return *this;
  }
  TruncatedSeries& operator*=(const QRationalFunction& c) {
    for (auto& x : coeffs_) x = x * c;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const QRationalFunction& c) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_order(b);
    const int n = a.order();
    TruncatedSeries out(n);
    for (int i = 0; i <= n; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b[j].is_zero()) continue;
        out[i + j] = out[i + j] + a[i] * b[j];
      }
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw Error(ErrorCode::InvalidArgument, "truncation order must be nonnegative");
    return static_cast<std::size_t>(order) + 1;
  }
  void check_order(const TruncatedSeries& rhs) const {
    if (rhs.order() != order()) throw Error(ErrorCode::InvalidArgument, "truncation orders differ");
  }

  std::vector<R> coeffs_;
};

/// Multiplicative inverse; the constant term must be a unit.
template <CoefficientRing R>
TruncatedSeries<R> series_invert(const TruncatedSeries<R>& f) {
  if (f.constant_term().is_zero()) throw Error(ErrorCode::NonInvertibleConstantTerm, "constant term is zero");
  const R inv0 = ring_inverse(f.constant_term());
  const int n = f.order();
  TruncatedSeries<R> g(n);
  g[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    R acc{};
    for (int j = 1; j <= k; ++j) {
      if (!f[j].is_zero() && !g[k - j].is_zero()) acc = acc + f[j] * g[k - j];
    }
    g[k] = -(acc * inv0);
  }
  return g;
}

/// Classical logarithm sum_{j>=1} (-1)^(j+1) (f-1)^j / j of a series with constant term 1.
template <CoefficientRing R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& f) {
  if (!(f.constant_term() == R::one())) throw Error(ErrorCode::ConstantTermNotOne, "series_log needs constant term 1");
  const int n = f.order();
  TruncatedSeries<R> h = f;
  h[0] = R{};
  TruncatedSeries<R> power = h;
  TruncatedSeries<R> out(n);
  for (int j = 1; j <= n; ++j) {
    const QRationalFunction weight(Rational(j % 2 == 1 ? 1 : -1, j));
    out += power * weight;
    if (j < n) power = power * h;
  }
  return out;
}

/// Classical exponential of a series with constant term 0, via h' = g' h.
template <CoefficientRing R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& g) {
  if (!g.constant_term().is_zero()) throw Error(ErrorCode::ConstantTermNotZero, "series_exp needs constant term 0");
  const int n = g.order();
  TruncatedSeries<R> h(n);
  h[0] = R::one();
  for (int k = 1; k <= n; ++k) {
    R acc{};
    for (int j = 1; j <= k; ++j) {
      if (g[j].is_zero() || h[k - j].is_zero()) continue;
      acc = acc + g[j] * h[k - j] * QRationalFunction(Rational(j));
    }
    h[k] = acc * QRationalFunction(Rational(1, k));
  }
  return h;
}

/// Adams operation: Psi_i on every coefficient combined with t -> t^i.
template <CoefficientRing R>
TruncatedSeries<R> adams(const TruncatedSeries<R>& f, int i) {
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "Adams index must be positive");
  const int n = f.order();
  TruncatedSeries<R> out(n);
  for (int d = 0; d * i <= n; ++d) out[d * i] = adams(f[d], i);
  return out;
}

/// Psi^{-1} = sum_i mu(i)/i Psi_i, restricted to series with zero constant term.
template <CoefficientRing R>
TruncatedSeries<R> inverse_adams_sum(const TruncatedSeries<R>& g) {
  const int n = g.order();
  TruncatedSeries<R> out(n);
  for (int i = 1; i <= n; ++i) {
    const int mu = moebius(i);
    if (mu == 0) continue;
    out += adams(g, i) * QRationalFunction(Rational(mu, i));
  }
  return out;
}

/// Psi = sum_i 1/i Psi_i, restricted to series with zero constant term.
template <CoefficientRing R>
TruncatedSeries<R> adams_sum(const TruncatedSeries<R>& g) {
  const int n = g.order();
  TruncatedSeries<R> out(n);
  for (int i = 1; i <= n; ++i) out += adams(g, i) * QRationalFunction(Rational(1, i));
  return out;
}

/// Plethystic logarithm, Log = Psi^{-1} o log.
template <CoefficientRing R>
TruncatedSeries<R> plethystic_log(const TruncatedSeries<R>& f) {
  return inverse_adams_sum(series_log(f));
}

/// Plethystic exponential, Exp = exp o Psi; the inverse of plethystic_log.
template <CoefficientRing R>
TruncatedSeries<R> plethystic_exp(const TruncatedSeries<R>& g) {
  if (!g.constant_term().is_zero()) throw Error(ErrorCode::ConstantTermNotZero, "plethystic_exp needs constant term 0");
  return series_exp(adams_sum(g));
}

/// T(t^d) = (-1)^d q^((1-m) d(d-1)/2) t^d.
struct FixedRankTwist {
  int m;
};
/// T(t^d) = (-1)^d (q^-1 u)^(-d(d-1)/2) t^d; only defined over Q(q)[u].
struct TwoVariableTwist {};
using TwistVariant = std::variant<FixedRankTwist, TwoVariableTwist>;

inline QRationalFunction fixed_rank_twist_factor(int d, int m) {
  const QRationalFunction sign((d % 2 == 0) ? 1 : -1);
  return sign * QRationalFunction::q_power((1 - m) * (d * (d - 1) / 2));
}

template <CoefficientRing R>
TruncatedSeries<R> twist(const TruncatedSeries<R>& f, FixedRankTwist variant) {
  TruncatedSeries<R> out = f;
  for (int d = 1; d <= f.order(); ++d) out[d] = f[d] * fixed_rank_twist_factor(d, variant.m);
  return out;
}

template <CoefficientRing R>
TruncatedSeries<R> twist_inverse(const TruncatedSeries<R>& f, FixedRankTwist variant) {
  TruncatedSeries<R> out = f;
  for (int d = 1; d <= f.order(); ++d) out[d] = f[d] * fixed_rank_twist_factor(d, variant.m).inverse();
  return out;
}

/// Throws NotAPolynomial if a t^d coefficient is not divisible by u^(d(d-1)/2).
TruncatedSeries<UPolynomial> twist(const TruncatedSeries<UPolynomial>& f, TwoVariableTwist);
TruncatedSeries<UPolynomial> twist_inverse(const TruncatedSeries<UPolynomial>& f, TwoVariableTwist);

inline TruncatedSeries<UPolynomial> twist(const TruncatedSeries<UPolynomial>& f, const TwistVariant& v) {
  return std::visit([&](auto variant) { return twist(f, variant); }, v);
}
inline TruncatedSeries<UPolynomial> twist_inverse(const TruncatedSeries<UPolynomial>& f, const TwistVariant& v) {
  return std::visit([&](auto variant) { return twist_inverse(f, variant); }, v);
}

/// Bilinear product with t^d o t^e = q^((m-1)de) t^(d+e).
template <CoefficientRing R>
TruncatedSeries<R> twisted_product(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g, int m) {
  if (f.order() != g.order()) throw Error(ErrorCode::InvalidArgument, "truncation orders differ");
  const int n = f.order();
  TruncatedSeries<R> out(n);
  for (int d = 0; d <= n; ++d) {
    if (f[d].is_zero()) continue;
    for (int e = 0; d + e <= n; ++e) {
      if (g[e].is_zero()) continue;
      out[d + e] = out[d + e] + f[d] * g[e] * QRationalFunction::q_power((m - 1) * d * e);
    }
  }
  return out;
}

/// Substitute u := x in every coefficient.
TruncatedSeries<QRationalFunction> substitute_u(const TruncatedSeries<UPolynomial>& f, const QRationalFunction& x);

}  // namespace genpoly
