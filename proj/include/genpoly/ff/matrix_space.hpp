#pragma once

#include <array>
#include <optional>

#include "genpoly/ff/prime_field.hpp"

namespace genpoly::ff {

inline constexpr int kMaxDimension = 5;
inline constexpr int kMaxEntries = kMaxDimension * kMaxDimension;

/// A d x d matrix over F_p, row-major, viewed as a vector of length d^2.
/// Entries past d^2 are always zero.
struct FFMatrix {
  std::array<Element, kMaxEntries> entries{};

  friend bool operator==(const FFMatrix&, const FFMatrix&) = default;
  friend auto operator<=>(const FFMatrix&, const FFMatrix&) = default;
};

/// M_d(F_p) as an algebra: the context every matrix/vector operation runs in.
class MatrixSpace {
 public:
  /// Throws InvalidArgument unless 1 <= d <= kMaxDimension and p is a small prime.
  MatrixSpace(int d, unsigned p);

  int d() const noexcept { return d_; }
  /// Vector-space dimension d^2.
  int dimension() const noexcept { return d_ * d_; }
  const PrimeField& field() const noexcept { return field_; }
  unsigned p() const noexcept { return field_.modulus(); }

  Element at(const FFMatrix& a, int row, int col) const { return a.entries[static_cast<std::size_t>(row * d_ + col)]; }
  Element& at(FFMatrix& a, int row, int col) const { return a.entries[static_cast<std::size_t>(row * d_ + col)]; }

  FFMatrix identity() const;
  /// E_ij: 1 in position (i, j).
  FFMatrix unit(int row, int col) const;
  FFMatrix multiply(const FFMatrix& a, const FFMatrix& b) const;
  FFMatrix add(const FFMatrix& a, const FFMatrix& b) const;
  FFMatrix scale(const FFMatrix& a, Element c) const;
  /// Gauss-Jordan inverse; nullopt for singular matrices.
  std::optional<FFMatrix> inverse(const FFMatrix& a) const;

 private:
  int d_;
  PrimeField field_;
};

}  // namespace genpoly::ff
