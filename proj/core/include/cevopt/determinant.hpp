#pragma once

#include "cevopt/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cevopt {

// Determinant of a dense square matrix given as rows; the matrix is consumed.
// Floating point uses Gaussian elimination with partial pivoting. Exact
// scalars use Bareiss fraction-free elimination, whose intermediate divisions
// are exact, so the result carries no roundoff by construction.
template <class S>
S determinant(std::vector<std::vector<S>> rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  }

  int sign = 1;
  if constexpr (scalar_traits<S>::is_exact) {
    S prev(1);
    for (std::size_t r = 0; r + 1 < n; ++r) {
      std::size_t pivot = r;
      while (pivot < n && rows[pivot][r] == S(0)) ++pivot;
      if (pivot == n) return S(0);
      if (pivot != r) {
        std::swap(rows[pivot], rows[r]);
        sign = -sign;
      }
      for (std::size_t i = r + 1; i < n; ++i) {
        for (std::size_t j = r + 1; j < n; ++j) {
          rows[i][j] = (rows[r][r] * rows[i][j] - rows[i][r] * rows[r][j]) / prev;
        }
        rows[i][r] = S(0);
      }
      prev = rows[r][r];
    }
    return S(sign) * rows[n - 1][n - 1];
  } else {
    S det(1);
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t pivot = r;
      for (std::size_t i = r + 1; i < n; ++i) {
        if (scalar_traits<S>::abs(rows[i][r]) > scalar_traits<S>::abs(rows[pivot][r])) pivot = i;
      }
      if (rows[pivot][r] == S(0)) return S(0);
      if (pivot != r) {
        std::swap(rows[pivot], rows[r]);
        sign = -sign;
      }
      det *= rows[r][r];
      for (std::size_t i = r + 1; i < n; ++i) {
        const S factor = rows[i][r] / rows[r][r];
        for (std::size_t j = r; j < n; ++j) rows[i][j] -= factor * rows[r][j];
      }
    }
    return S(sign) * det;
  }
}

}  // namespace cevopt
