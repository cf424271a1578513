#include "genpoly/combinatorics.hpp"

#include "genpoly/error.hpp"

namespace genpoly {

QRationalFunction gaussian_binomial(int a, int b) {
  if (b < 0) throw Error(ErrorCode::InvalidArgument, "gaussian_binomial requires b >= 0");
  QPolynomial num(1);
  QPolynomial den(1);
  int q_shift = 0;  // accumulated q^(-k) factors from negative exponents
  for (int i = 0; i < b; ++i) {
    const int k = a - i;
    if (k >= 0) {
      num *= QPolynomial::q_power_minus_one(k);
    } else {
      num *= -QPolynomial::q_power_minus_one(-k);
      q_shift += -k;
    }
    den *= QPolynomial::q_power_minus_one(i + 1);
  }
  return QRationalFunction(std::move(num), den.shifted(q_shift));
}

QPolynomial q_integer(int a) {
  if (a < 0) throw Error(ErrorCode::InvalidArgument, "q_integer requires a >= 0");
  return QPolynomial(std::vector<Rational>(static_cast<std::size_t>(a), Rational(1)));
}

QRationalFunction falling_q_product(const QRationalFunction& x, int r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "falling_q_product requires r >= 0");
  QRationalFunction out(1);
  for (int i = 0; i < r; ++i) out *= x - QRationalFunction::q_power(i);
  return out;
}

UPolynomial falling_q_product(const UPolynomial& x, int r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "falling_q_product requires r >= 0");
  UPolynomial out(1);
  for (int i = 0; i < r; ++i) out *= x - UPolynomial(QRationalFunction::q_power(i));
  return out;
}

QPolynomial q_factorial_minus(int n) {
  QPolynomial out(1);
  for (int i = 1; i <= n; ++i) out *= QPolynomial::q_power_minus_one(i);
  return out;
}

int moebius(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "moebius requires n >= 1");
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

QPolynomial pgl_order(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "pgl_order requires d >= 1");
  // q^(d(d-1)/2) * prod_{j=2}^{d} (q^j - 1)
  QPolynomial out = QPolynomial::monomial(1, d * (d - 1) / 2);
  for (int j = 2; j <= d; ++j) out *= QPolynomial::q_power_minus_one(j);
  return out;
}

QRationalFunction orbit_prefactor(int d) { return QRationalFunction(QPolynomial(1), pgl_order(d)); }

UPolynomial mahler_basis_element(int l) {
  if (l < 0) throw Error(ErrorCode::InvalidArgument, "mahler_basis_element requires l >= 0");
  UPolynomial out(1);
  for (int i = 1; i <= l; ++i) {
    const QRationalFunction inv_den = QRationalFunction(QPolynomial(1), QPolynomial::q_power_minus_one(i));
    UPolynomial factor(std::vector<QRationalFunction>{-inv_den, QRationalFunction::q_power(1 - i) * inv_den});
    out *= factor;
  }
  return out;
}

}  // namespace genpoly
