#include "genpoly/ff/subspace.hpp"

#include <algorithm>

#include "f2.hpp"
#include "genpoly/error.hpp"

namespace genpoly::ff {

namespace {

detail::Bits pack(const MatrixSpace& space, const FFMatrix& a) {
  detail::Bits out = 0;
  for (int k = 0; k < space.dimension(); ++k) {
    if (a.entries[static_cast<std::size_t>(k)] != 0) out |= detail::Bits{1} << k;
  }
  return out;
}

int first_nonzero(const MatrixSpace& space, const FFMatrix& v) {
  for (int k = 0; k < space.dimension(); ++k) {
    if (v.entries[static_cast<std::size_t>(k)] != 0) return k;
  }
  return -1;
}

// v <- v - c * row
void axpy(const PrimeField& f, FFMatrix& v, Element c, const FFMatrix& row, int n) {
  for (int k = 0; k < n; ++k) {
    auto& e = v.entries[static_cast<std::size_t>(k)];
    e = f.sub(e, f.mul(c, row.entries[static_cast<std::size_t>(k)]));
  }
}

std::vector<FFMatrix> reduced_row_echelon(const MatrixSpace& space, std::vector<FFMatrix> rows) {
  const PrimeField& f = space.field();
  const int n = space.dimension();
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot].entries[static_cast<std::size_t>(col)] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Element s = f.inv(rows[rank].entries[static_cast<std::size_t>(col)]);
    for (int k = 0; k < n; ++k) {
      rows[rank].entries[static_cast<std::size_t>(k)] = f.mul(rows[rank].entries[static_cast<std::size_t>(k)], s);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Element c = rows[r].entries[static_cast<std::size_t>(col)];
      if (r != rank && c != 0) axpy(f, rows[r], c, rows[rank], n);
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace

FFMatrix EchelonBasis::reduce(FFMatrix v) const {
  const PrimeField& f = space_->field();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Element c = v.entries[static_cast<std::size_t>(pivots_[r])];
    if (c != 0) axpy(f, v, c, rows_[r], space_->dimension());
  }
  return v;
}

bool EchelonBasis::insert(const FFMatrix& v) {
  FFMatrix w = reduce(v);
  const int pivot = first_nonzero(*space_, w);
  if (pivot < 0) return false;
  const PrimeField& f = space_->field();
  const Element s = f.inv(w.entries[static_cast<std::size_t>(pivot)]);
  for (int k = 0; k < space_->dimension(); ++k) w.entries[static_cast<std::size_t>(k)] = f.mul(w.entries[static_cast<std::size_t>(k)], s);
  rows_.push_back(w);
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(const FFMatrix& v) const { return first_nonzero(*space_, reduce(v)) < 0; }

FFSubspace FFSubspace::span(const MatrixSpace& space, std::span<const FFMatrix> vectors) {
  FFSubspace out(space);
  out.basis_ = reduced_row_echelon(space, std::vector<FFMatrix>(vectors.begin(), vectors.end()));
  return out;
}

bool FFSubspace::contains(const FFMatrix& v) const {
  EchelonBasis e(space_);
  for (const auto& b : basis_) e.insert(b);
  return e.contains(v);
}

bool FFSubspace::contains(const FFSubspace& other) const {
  EchelonBasis e(space_);
  for (const auto& b : basis_) e.insert(b);
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const FFMatrix& v) { return e.contains(v); });
}

FFSubspace FFSubspace::conjugate(const FFMatrix& g) const {
  const auto g_inv = space_.inverse(g);
  if (!g_inv) throw Error(ErrorCode::InvalidArgument, "conjugation by a singular matrix");
  std::vector<FFMatrix> images;
  images.reserve(basis_.size());
  for (const auto& b : basis_) images.push_back(space_.multiply(space_.multiply(g, b), *g_inv));
  return span(space_, images);
}

ClosureResult unital_closure(const FFSubspace& u) {
  const MatrixSpace& space = u.space();
  EchelonBasis e(space);
  e.insert(space.identity());
  for (const auto& b : u.basis()) e.insert(b);
  std::vector<int> trace{e.dim()};
  while (e.dim() < space.dimension()) {
    const std::vector<FFMatrix> current = e.rows();
    for (const auto& x : current) {
      for (const auto& y : current) e.insert(space.multiply(x, y));
    }
    if (e.dim() == trace.back()) break;
    trace.push_back(e.dim());
  }
  return {FFSubspace::span(space, e.rows()), std::move(trace)};
}

bool generates_full_algebra(const MatrixSpace& space, std::span<const FFMatrix> generators) {
  if (space.p() == 2) {
    std::vector<detail::Bits> packed;
    packed.reserve(generators.size());
    for (const auto& g : generators) packed.push_back(pack(space, g));
    return detail::F2Algebra(space.d()).generates(packed);
  }
  const int full = space.dimension();
  EchelonBasis e(space);
  std::vector<FFMatrix> elements;
  auto insert = [&](const FFMatrix& v) {
    if (!e.insert(v)) return false;
    elements.push_back(v);
    return true;
  };
  insert(space.identity());
  for (const auto& g : generators) insert(g);
  for (std::size_t i = 0; i < elements.size() && e.dim() < full; ++i) {
    for (std::size_t j = 0; j <= i && e.dim() < full; ++j) {
      const FFMatrix x = elements[i];
      const FFMatrix y = elements[j];
      insert(space.multiply(x, y));
      if (i != j) insert(space.multiply(y, x));
    }
  }
  return e.dim() == full;
}

bool generates_full_algebra(const FFSubspace& u) { return generates_full_algebra(u.space(), u.basis()); }

}  // namespace genpoly::ff
