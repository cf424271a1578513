#include "genpoly/ff/matrix_space.hpp"

#include <utility>

#include "genpoly/error.hpp"

namespace genpoly::ff {

MatrixSpace::MatrixSpace(int d, unsigned p) : d_(d), field_(p) {
  if (d < 1 || d > kMaxDimension) throw Error(ErrorCode::InvalidArgument, "matrix dimension out of range");
}

FFMatrix MatrixSpace::identity() const {
  FFMatrix out;
  for (int i = 0; i < d_; ++i) at(out, i, i) = 1;
  return out;
}

FFMatrix MatrixSpace::unit(int row, int col) const {
  FFMatrix out;
  at(out, row, col) = 1;
  return out;
}

FFMatrix MatrixSpace::multiply(const FFMatrix& a, const FFMatrix& b) const {
  FFMatrix out;
  const unsigned p = field_.modulus();
  for (int i = 0; i < d_; ++i) {
    for (int j = 0; j < d_; ++j) {
      unsigned acc = 0;
      for (int k = 0; k < d_; ++k) acc += unsigned{at(a, i, k)} * at(b, k, j);
      at(out, i, j) = static_cast<Element>(acc % p);
    }
  }
  return out;
}

FFMatrix MatrixSpace::add(const FFMatrix& a, const FFMatrix& b) const {
  FFMatrix out;
  for (int k = 0; k < dimension(); ++k) {
    out.entries[static_cast<std::size_t>(k)] = field_.add(a.entries[static_cast<std::size_t>(k)], b.entries[static_cast<std::size_t>(k)]);
  }
  return out;
}

FFMatrix MatrixSpace::scale(const FFMatrix& a, Element c) const {
  FFMatrix out;
  for (int k = 0; k < dimension(); ++k) out.entries[static_cast<std::size_t>(k)] = field_.mul(a.entries[static_cast<std::size_t>(k)], c);
  return out;
}

std::optional<FFMatrix> MatrixSpace::inverse(const FFMatrix& a) const {
  FFMatrix m = a;
  FFMatrix inv = identity();
  for (int col = 0; col < d_; ++col) {
    int pivot = -1;
    for (int row = col; row < d_; ++row) {
      if (at(m, row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    for (int k = 0; k < d_; ++k) {
      std::swap(at(m, pivot, k), at(m, col, k));
      std::swap(at(inv, pivot, k), at(inv, col, k));
    }
    const Element s = field_.inv(at(m, col, col));
    for (int k = 0; k < d_; ++k) {
      at(m, col, k) = field_.mul(at(m, col, k), s);
      at(inv, col, k) = field_.mul(at(inv, col, k), s);
    }
    for (int row = 0; row < d_; ++row) {
      if (row == col || at(m, row, col) == 0) continue;
      const Element f = at(m, row, col);
      for (int k = 0; k < d_; ++k) {
        at(m, row, k) = field_.sub(at(m, row, k), field_.mul(f, at(m, col, k)));
        at(inv, row, k) = field_.sub(at(inv, row, k), field_.mul(f, at(inv, col, k)));
      }
    }
  }
  return inv;
}

}  // namespace genpoly::ff
