#pragma once

#include <gmpxx.h>

#include <string>

namespace genpoly {

/// Exact rational in lowest terms with positive denominator (GMP `mpq_class`).
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// q^k with k >= 0 as an exact integer.
inline BigInt ipow(const BigInt& base, unsigned long k) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), k);
  return out;
}

}  // namespace genpoly
