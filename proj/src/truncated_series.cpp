#include "genpoly/truncated_series.hpp"

namespace genpoly {

namespace {

// (-1)^d (q^-1 u)^(k) with k = d(d-1)/2, as a scalar in q and a power of u.
QRationalFunction two_variable_sign_q(int d, int q_exponent) {
  const QRationalFunction sign((d % 2 == 0) ? 1 : -1);
  return sign * QRationalFunction::q_power(q_exponent);
}

}  // namespace

TruncatedSeries<UPolynomial> twist(const TruncatedSeries<UPolynomial>& f, TwoVariableTwist) {
  TruncatedSeries<UPolynomial> out = f;
  for (int d = 1; d <= f.order(); ++d) {
    const int k = d * (d - 1) / 2;
    const UPolynomial& c = f[d];
    if (c.is_zero()) continue;
    if (k > 0 && c.valuation() < k) {
      throw Error(ErrorCode::NotAPolynomial, "twist would produce negative powers of u");
    }
    std::vector<QRationalFunction> shifted(c.coefficients().begin() + k, c.coefficients().end());
    out[d] = UPolynomial(std::move(shifted)) * two_variable_sign_q(d, k);
  }
  return out;
}

TruncatedSeries<UPolynomial> twist_inverse(const TruncatedSeries<UPolynomial>& f, TwoVariableTwist) {
  TruncatedSeries<UPolynomial> out = f;
  for (int d = 1; d <= f.order(); ++d) {
    const int k = d * (d - 1) / 2;
    out[d] = f[d] * UPolynomial::monomial(two_variable_sign_q(d, -k), k);
  }
  return out;
}

TruncatedSeries<QRationalFunction> substitute_u(const TruncatedSeries<UPolynomial>& f, const QRationalFunction& x) {
  TruncatedSeries<QRationalFunction> out(f.order());
  for (int d = 0; d <= f.order(); ++d) out[d] = f[d].substitute(x);
  return out;
}

}  // namespace genpoly
