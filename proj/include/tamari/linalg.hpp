#pragma once

#include <cstddef>
#include <vector>

#include "tamari/bigint.hpp"

namespace tamari {

/// Dense integer matrix.  Row/column meaning is supplied by the caller
/// (labels live at the call site, which addresses bases by their
/// deterministic enumeration order).
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

/// Rank over the rationals, computed by fraction-free (Bareiss) elimination;
/// all intermediate values are exact integers.
std::size_t rank(IntMatrix m);

/// Basis of the rational kernel of m, returned as integer vectors with
/// content 1 and positive leading entry.  M*v = 0 exactly for each v and the
/// basis has cols - rank vectors.  Fraction-free Gauss-Jordan; no rational
/// numbers are formed.
std::vector<std::vector<Int>> kernel_basis(IntMatrix m);

/// Exact matrix-vector product, for verification.
std::vector<Int> apply(const IntMatrix& m, const std::vector<Int>& v);

}  // namespace tamari
