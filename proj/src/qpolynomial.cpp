#include "genpoly/qpolynomial.hpp"

#include <algorithm>

#include "genpoly/error.hpp"
#include "zpoly.hpp"

namespace genpoly {

QPolynomial::QPolynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPolynomial QPolynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative monomial degree");
  QPolynomial p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.coeffs_.back() = c;
  return p;
}

QPolynomial QPolynomial::q_power_minus_one(int k) {
  if (k == 0) return {};
  QPolynomial p = monomial(1, k);
  p.coeffs_.front() -= 1;
  return p;
}

bool QPolynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational QPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

int QPolynomial::valuation() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return 0;
}

bool QPolynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto [za, da] = detail::cleared_form(a);
  auto [zb, db] = detail::cleared_form(b);
  const detail::ZPoly prod = detail::multiply(za, zb);
  const BigInt den = da * db;
  std::vector<Rational> coeffs;
  coeffs.reserve(prod.size());
  for (const auto& c : prod) {
    if (den == 1) {
      coeffs.emplace_back(c);
    } else {
      coeffs.push_back(make_rational(c, den));
    }
  }
  return QPolynomial(std::move(coeffs));
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QPolynomial QPolynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  QPolynomial out;
  if (k > 0) {
    out.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
  }
  const auto drop = static_cast<std::size_t>(-k);
  if (valuation() < -k) throw Error(ErrorCode::NotAPolynomial, "negative shift past valuation");
  out.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(drop), coeffs_.end());
  return out;
}

QPolynomial QPolynomial::adams(int i) const {
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "Adams index must be positive");
  if (i == 1 || is_constant()) return *this;
  QPolynomial out;
  out.coeffs_.assign(static_cast<std::size_t>(degree()) * i + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k * i] = coeffs_[k];
  return out;
}

QPolynomial QPolynomial::monic() const {
  if (is_zero() || leading() == 1) return *this;
  const Rational inv = 1 / leading();
  return *this * inv;
}

Rational QPolynomial::evaluate(const Rational& v) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= v;
    acc += *it;
  }
  return acc;
}

QPolynomial pow(const QPolynomial& base, unsigned exponent) {
  QPolynomial result(1);
  QPolynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {QPolynomial{}, a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const auto bc = b.coefficients();
  const int db = b.degree();
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (c == 0) continue;
    const int shift = k - db;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(shift + j)] -= c * bc[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(shift)] = std::move(c);
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial exact_quotient(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return {};
  auto [za, sa] = detail::integer_form(a);
  auto [zb, sb] = detail::integer_form(b);
  detail::ZPoly quot;
  // zb is primitive, so by Gauss's lemma any Q[q] quotient is already in Z[q].
  if (!detail::divides(za, zb, &quot)) {
    throw Error(ErrorCode::InexactDivision, "polynomial quotient has a remainder");
  }
  return detail::from_integer(quot, sa / sb);
}

QPolynomial gcd(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const int v = std::min(a.valuation(), b.valuation());
  const QPolynomial a0 = a.shifted(-a.valuation());
  const QPolynomial b0 = b.shifted(-b.valuation());
  if (a0.is_constant() || b0.is_constant()) return QPolynomial::monomial(1, v);
  const detail::ZPoly g = detail::gcd(detail::integer_form(a0).first, detail::integer_form(b0).first);
  return detail::from_integer(g, Rational(1, 1)).monic().shifted(v);
}

}  // namespace genpoly
