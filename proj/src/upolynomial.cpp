#include "genpoly/upolynomial.hpp"

#include "genpoly/error.hpp"

namespace genpoly {

UPolynomial::UPolynomial(const QRationalFunction& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

UPolynomial::UPolynomial(std::vector<QRationalFunction> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPolynomial UPolynomial::monomial(const QRationalFunction& c, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative monomial degree");
  UPolynomial p;
  if (c.is_zero()) return p;
  p.coeffs_.resize(static_cast<std::size_t>(degree) + 1);
  p.coeffs_.back() = c;
  return p;
}

QRationalFunction UPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

int UPolynomial::valuation() const noexcept {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  }
  return 0;
}

void UPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPolynomial& UPolynomial::operator+=(const UPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UPolynomial& UPolynomial::operator-=(const UPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UPolynomial& UPolynomial::operator*=(const UPolynomial& rhs) { return *this = *this * rhs; }

UPolynomial& UPolynomial::operator*=(const QRationalFunction& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

namespace {

// Numerators over the common denominator: p = (sum_k out[k] u^k) / den.
std::vector<QPolynomial> scaled_numerators(std::span<const QRationalFunction> coeffs, const QPolynomial& den) {
  std::vector<QPolynomial> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (c.is_zero()) {
      out.emplace_back();
    } else if (c.denominator() == den) {
      out.push_back(c.numerator());
    } else {
      out.push_back(c.numerator() * exact_quotient(den, c.denominator()));
    }
  }
  return out;
}

}  // namespace

UPolynomial operator*(const UPolynomial& a, const UPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.degree() == 0) return b * a.coeffs_[0];
  if (b.degree() == 0) return a * b.coeffs_[0];
  // Multiply over a common denominator so each output coefficient is reduced once.
  const QPolynomial da = a.common_denominator();
  const QPolynomial db = b.common_denominator();
  const auto na = scaled_numerators(a.coeffs_, da);
  const auto nb = scaled_numerators(b.coeffs_, db);
  const QPolynomial den = da * db;
  std::vector<QPolynomial> acc(na.size() + nb.size() - 1);
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (na[i].is_zero()) continue;
    for (std::size_t j = 0; j < nb.size(); ++j) {
      if (nb[j].is_zero()) continue;
      acc[i + j] += na[i] * nb[j];
    }
  }
  std::vector<QRationalFunction> coeffs;
  coeffs.reserve(acc.size());
  for (auto& c : acc) coeffs.emplace_back(std::move(c), den);
  return UPolynomial(std::move(coeffs));
}

UPolynomial UPolynomial::operator-() const {
  UPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UPolynomial UPolynomial::adams(int i) const {
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "Adams index must be positive");
  if (i == 1 || is_zero()) return *this;
  UPolynomial out;
  out.coeffs_.resize(static_cast<std::size_t>(degree()) * i + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k * i] = coeffs_[k].adams(i);
  return out;
}

QRationalFunction UPolynomial::substitute(const QRationalFunction& x) const {
  QRationalFunction acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

QPolynomial UPolynomial::common_denominator() const {
  QPolynomial den(1);
  for (const auto& c : coeffs_) {
    const QPolynomial& d = c.denominator();
    if (d.is_one() || d == den) continue;
    const QPolynomial g = gcd(den, d);
    den *= exact_quotient(d, g);
  }
  return den;
}

std::pair<UPolynomial, UPolynomial> divmod(const UPolynomial& a, const UPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero u-polynomial");
  if (a.degree() < b.degree()) return {UPolynomial{}, a};
  std::vector<QRationalFunction> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<QRationalFunction> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const auto bc = b.coefficients();
  const int db = b.degree();
  const QRationalFunction inv_lead = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    QRationalFunction c = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (c.is_zero()) continue;
    const int shift = k - db;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(shift + j)] -= c * bc[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(shift)] = std::move(c);
  }
  return {UPolynomial(std::move(quot)), UPolynomial(std::move(rem))};
}

UPolynomial ring_inverse(const UPolynomial& x) {
  if (x.degree() != 0) throw Error(ErrorCode::NonInvertibleConstantTerm, "constant term is not a unit of Q(q)[u]");
  return UPolynomial(x.leading().inverse());
}

}  // namespace genpoly
