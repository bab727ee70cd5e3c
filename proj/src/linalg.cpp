#include "tamari/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace tamari {

namespace {

Int exact_div(const Int& num, const Int& den) {
  Int q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("fraction-free elimination: division not exact");
  return q;
}

struct Echelon {
  IntMatrix m;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  Int last_pivot{1};
};

// One-step fraction-free Gauss-Jordan.  After step k every entry is (up to
// sign) a minor of the original matrix, so dividing by the previous pivot is
// exact.  On return the pivot columns are last_pivot * e_i.
Echelon gauss_jordan(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Echelon e{std::move(m), {}, Int(1)};
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && e.m.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(e.m.at(p, j), e.m.at(r, j));
    const Int piv = e.m.at(r, c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Int f = e.m.at(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        e.m.at(i, j) = exact_div(piv * e.m.at(i, j) - f * e.m.at(r, j), prev);
      }
      e.m.at(i, c) = 0;
    }
    e.pivots.emplace_back(r, c);
    prev = piv;
    ++r;
  }
  e.last_pivot = prev;
  return e;
}

void normalize(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
}

}  // namespace

std::size_t rank(IntMatrix m) { return gauss_jordan(std::move(m)).pivots.size(); }

std::vector<std::vector<Int>> kernel_basis(IntMatrix m) {
  const std::size_t cols = m.cols();
  Echelon e = gauss_jordan(std::move(m));
  std::vector<bool> is_pivot_col(cols, false);
  for (auto [r, c] : e.pivots) is_pivot_col[c] = true;
  std::vector<std::vector<Int>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot_col[f]) continue;
    std::vector<Int> v(cols, Int(0));
    v[f] = e.last_pivot;
    for (auto [r, c] : e.pivots) v[c] = -e.m.at(r, f);
    normalize(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Int> apply(const IntMatrix& m, const std::vector<Int>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<Int> out(m.rows(), Int(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0 && v[c] != 0) out[r] += m.at(r, c) * v[c];
  return out;
}

}  // namespace tamari
