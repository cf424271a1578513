#pragma once

#include <span>
#include <vector>

#include "genpoly/ff/matrix_space.hpp"

namespace genpoly::ff {

/// Incremental semi-echelon basis: each stored row is normalized to 1 at its
/// pivot (first nonzero entry) and is zero at the pivots of earlier rows.
class EchelonBasis {
 public:
  explicit EchelonBasis(const MatrixSpace& space) : space_(&space) {}

  /// Reduces v against the basis; adds it and returns true if independent.
  bool insert(const FFMatrix& v);
  bool contains(const FFMatrix& v) const;
  int dim() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<FFMatrix>& rows() const noexcept { return rows_; }

 private:
  FFMatrix reduce(FFMatrix v) const;

  const MatrixSpace* space_;
  std::vector<FFMatrix> rows_;
  std::vector<int> pivots_;
};

/// Subspace of M_d(F_p) held in canonical reduced row-echelon form, so that
/// subspace equality is structural equality.
class FFSubspace {
 public:
  explicit FFSubspace(const MatrixSpace& space) : space_(space) {}
  static FFSubspace span(const MatrixSpace& space, std::span<const FFMatrix> vectors);

  const MatrixSpace& space() const noexcept { return space_; }
  int d() const noexcept { return space_.d(); }
  unsigned p() const noexcept { return space_.p(); }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<FFMatrix>& basis() const noexcept { return basis_; }

  bool contains(const FFMatrix& v) const;
  bool contains(const FFSubspace& other) const;
  /// g U g^-1; throws InvalidArgument if g is singular.
  FFSubspace conjugate(const FFMatrix& g) const;

  friend bool operator==(const FFSubspace& a, const FFSubspace& b) {
    return a.d() == b.d() && a.p() == b.p() && a.basis_ == b.basis_;
  }

 private:
  MatrixSpace space_;
  std::vector<FFMatrix> basis_;
};

struct ClosureResult {
  FFSubspace closure;
  /// Dimension after adjoining the identity, then after each round that grew.
  std::vector<int> dimension_trace;
};

/// Smallest unital subalgebra containing U, by rounds of span <- span + span*span.
ClosureResult unital_closure(const FFSubspace& u);

/// True iff U together with the identity generates M_d(F_p) as an algebra.
/// Worklist closure with early exit; bit-packed XOR reduction when p = 2.
bool generates_full_algebra(const FFSubspace& u);
bool generates_full_algebra(const MatrixSpace& space, std::span<const FFMatrix> generators);

}  // namespace genpoly::ff
