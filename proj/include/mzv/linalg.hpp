#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/numeric.hpp"

namespace mzv {

inline double pivot_size(const BigReal& x) { return std::abs(x.to_double()); }
inline double pivot_size(const BigComplex& z) { return std::hypot(z.re.to_double(), z.im.to_double()); }

/// Solves A x = b by Gaussian elimination with partial pivoting.
template <class T>
std::vector<T> solve_linear(std::vector<std::vector<T>> a, std::vector<T> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (pivot_size(a[r][col]) > pivot_size(a[best][col])) best = r;
    if (pivot_size(a[best][col]) == 0) throw DomainError("singular linear system");
    std::swap(a[col], a[best]);
    std::swap(b[col], b[best]);
    for (std::size_t r = col + 1; r < n; ++r) {
      T factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<T> x(b);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = i + 1; c < n; ++c) x[i] -= a[i][c] * x[c];
    x[i] /= a[i][i];
  }
  return x;
}

}  // namespace mzv
