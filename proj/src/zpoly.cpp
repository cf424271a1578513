#include "zpoly.hpp"

#include <algorithm>

namespace genpoly::detail {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly multiply(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

BigInt evaluate(const ZPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(ZPoly p) {
  trim(p);
  if (p.empty()) return p;
  BigInt g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return p;
}

bool divides(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
  if (b.empty()) return false;
  if (a.empty()) {
    if (quotient) quotient->clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  // Cheap necessary condition on the constant terms.
  if (b.front() != 0 && !mpz_divisible_p(a.front().get_mpz_t(), b.front().get_mpz_t())) {
    return false;
  }
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly quot(a.size() - db);
  BigInt c;
  for (std::size_t k = a.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), b.back().get_mpz_t());
    const std::size_t shift = k - db;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    quot[shift] = c;
  }
  for (std::size_t k = 0; k < db; ++k) {
    if (r[k] != 0) return false;
  }
  if (quotient) {
    trim(quot);
    *quotient = std::move(quot);
  }
  return true;
}

namespace {

BigInt max_norm(const ZPoly& p) {
  BigInt m = 0;
  for (const auto& c : p) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

// Pseudo-remainder of a by b.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    BigInt lead = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(a[shift + j].get_mpz_t(), lead.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(a);
  }
  return a;
}

ZPoly gcd_prs(ZPoly a, ZPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(std::move(a));
}

// Heuristic gcd (evaluate at a large integer, take the integer gcd and read the
// polynomial back from its balanced xi-adic digits). A candidate is accepted only
// after it divides both inputs, which makes it the true gcd.
bool gcd_heuristic(const ZPoly& a, const ZPoly& b, ZPoly* out) {
  BigInt xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  const std::size_t max_degree = std::max(a.size(), b.size());
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * max_degree > 4'000'000) return false;
    BigInt h;
    const BigInt va = evaluate(a, xi);
    const BigInt vb = evaluate(b, xi);
    mpz_gcd(h.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    ZPoly g;
    const BigInt half = xi / 2;
    BigInt digit;
    while (h != 0) {
      mpz_fdiv_r(digit.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      if (digit > half) digit -= xi;
      g.push_back(digit);
      h -= digit;
      mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    }
    g = primitive_part(std::move(g));
    if (!g.empty() && divides(a, g, nullptr) && divides(b, g, nullptr)) {
      *out = std::move(g);
      return true;
    }
    xi = xi * 73794 / 27011;
  }
  return false;
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.size() == 1 || b.size() == 1) return ZPoly{1};
  ZPoly g;
  if (gcd_heuristic(a, b, &g)) return g;
  return gcd_prs(a, b);
}

std::pair<ZPoly, BigInt> cleared_form(const QPolynomial& p) {
  BigInt den = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  ZPoly z;
  z.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (den == 1) {
      z.push_back(c.get_num());
    } else {
      BigInt v;
      mpz_divexact(v.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      v *= c.get_num();
      z.push_back(std::move(v));
    }
  }
  return {std::move(z), std::move(den)};
}

std::pair<ZPoly, Rational> integer_form(const QPolynomial& p) {
  auto [z, den] = cleared_form(p);
  BigInt g = content(z);
  if (z.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return {std::move(z), make_rational(g, den)};
}

QPolynomial from_integer(const ZPoly& z, const Rational& scale) {
  std::vector<Rational> coeffs;
  coeffs.reserve(z.size());
  for (const auto& c : z) coeffs.emplace_back(Rational(c) * scale);
  return QPolynomial(std::move(coeffs));
}

}  // namespace genpoly::detail
