#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>

namespace genpoly::ff::detail {

/// d x d matrix over F_2 with entry (i, j) at bit i*d + j.
using Bits = std::uint32_t;

class F2Algebra {
 public:
  explicit F2Algebra(int d) : d_(d), row_mask_((Bits{1} << d) - 1) {
    for (int i = 0; i < d; ++i) identity_ |= Bits{1} << (i * d + i);
    full_ = d * d;
  }

  int dimension() const noexcept { return full_; }
  Bits identity() const noexcept { return identity_; }

  Bits multiply(Bits a, Bits b) const noexcept {
    Bits out = 0;
    for (int i = 0; i < d_; ++i) {
      Bits row = (a >> (i * d_)) & row_mask_;
      Bits acc = 0;
      while (row != 0) {
        const int k = std::countr_zero(row);
        acc ^= (b >> (k * d_)) & row_mask_;
        row &= row - 1;
      }
      out |= acc << (i * d_);
    }
    return out;
  }

  /// Unital closure of span(generators) is all of M_d(F_2)?
  bool generates(std::span<const Bits> generators) const noexcept {
    std::array<Bits, 32> by_pivot{};
    std::array<Bits, 32> elements{};
    int count = 0;
    auto insert = [&](Bits v) {
      while (v != 0) {
        const int h = 31 - std::countl_zero(v);
        if (by_pivot[static_cast<std::size_t>(h)] == 0) {
          by_pivot[static_cast<std::size_t>(h)] = v;
          elements[static_cast<std::size_t>(count++)] = v;
          return true;
        }
        v ^= by_pivot[static_cast<std::size_t>(h)];
      }
      return false;
    };
    insert(identity_);
    for (Bits g : generators) insert(g);
    if (count == full_) return true;
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j <= i; ++j) {
        const Bits x = elements[static_cast<std::size_t>(i)];
        const Bits y = elements[static_cast<std::size_t>(j)];
        if (insert(multiply(x, y)) && count == full_) return true;
        if (i != j && insert(multiply(y, x)) && count == full_) return true;
      }
    }
    return count == full_;
  }

 private:
  int d_;
  Bits row_mask_;
  Bits identity_ = 0;
  int full_;
};

}  // namespace genpoly::ff::detail
