#pragma once

// Test-only independent oracles.  Everything here is deliberately written
// against the definitions rather than the library's computation paths, so a
// bug in the library cannot hide behind itself.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "tamari/bigint.hpp"

namespace oracles {

/// Catalan numbers by the convolution recursion.
inline tamari::Int catalan(int n) {
  std::vector<tamari::Int> c(n + 1);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    c[m] = 0;
    for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  }
  return c[n];
}

/// Free-monoid inversion: given graded dimensions T_1..T_k of a free
/// associative algebra, returns the generator dimensions p_n with
/// T_n = sum_{i=1}^{n} p_i T_{n-i}, T_0 = 1.
inline std::vector<tamari::Int> monoid_inversion(const std::vector<tamari::Int>& total) {
  std::vector<tamari::Int> p(total.size() + 1, 0), t(total.size() + 1, 0);
  t[0] = 1;
  for (std::size_t i = 1; i <= total.size(); ++i) t[i] = total[i - 1];
  for (std::size_t n = 1; n <= total.size(); ++n) {
    tamari::Int s = t[n];
    for (std::size_t i = 1; i < n; ++i) s -= p[i] * t[n - i];
    p[n] = s;
  }
  return std::vector<tamari::Int>(p.begin() + 1, p.end());
}

/// Rank over the rationals by plain rational Gaussian elimination; the
/// oracle counterpart of the fraction-free integer elimination.
inline std::size_t rank_rational(std::vector<std::vector<tamari::Int>> m) {
  using Rat = boost::multiprecision::cpp_rational;
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rat(m[i][j]);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracles
