#include "genpoly/ff/prime_field.hpp"

#include <string>

#include "genpoly/error.hpp"

namespace genpoly::ff {

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(unsigned p) : p_(p) {
  if (p >= 256 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not a prime below 256");
  for (unsigned a = 1; a < p; ++a) {
    for (unsigned b = 1; b < p; ++b) {
      if ((a * b) % p == 1) {
        inverse_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
}

Element PrimeField::inv(Element a) const {
  if (a % p_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p_));
  return inverse_[a];
}

}  // namespace genpoly::ff
