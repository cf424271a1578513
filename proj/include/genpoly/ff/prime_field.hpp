#pragma once

#include <array>
#include <cstdint>

namespace genpoly::ff {

using Element = std::uint8_t;

/// Z/pZ for a small prime p (p < 256).
class PrimeField {
 public:
  /// Throws InvalidArgument unless p is a prime below 256.
  explicit PrimeField(unsigned p);

  unsigned modulus() const noexcept { return p_; }
  Element add(Element a, Element b) const noexcept { return static_cast<Element>((a + b) % p_); }
  Element sub(Element a, Element b) const noexcept { return static_cast<Element>((a + p_ - b) % p_); }
  Element mul(Element a, Element b) const noexcept { return static_cast<Element>((unsigned{a} * b) % p_); }
  Element neg(Element a) const noexcept { return static_cast<Element>((p_ - a) % p_); }
  /// Throws DivisionByZero for a == 0.
  Element inv(Element a) const;

 private:
  unsigned p_;
  std::array<Element, 256> inverse_{};
};

bool is_prime(unsigned n) noexcept;

}  // namespace genpoly::ff
