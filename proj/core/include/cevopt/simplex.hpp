#pragma once

#include "cevopt/barycentric.hpp"
#include "cevopt/determinant.hpp"
#include "cevopt/scalar.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace cevopt {

// Setup: an n-simplex with vertices A_1..A_{n+1} and an interior point M with
// barycentric coordinates (l_1, ..., l_{n+1}). The cevian through A_i and M
// meets the opposite facet at the foot
//
//   N_i = (l_1, ..., 0, ..., l_{n+1}) / (1 - l_i),    zero in slot i,
//
// and divides the cevian so that |MN_i| / |A_iN_i| = l_i. The sub-simplex
// spanned by M and the feet N_j (j != i) has volume ratio
//
//   V_i / V = (1 - l_i) * prod_j l_j / (1 - l_j),
//
// which also equals |det| of the (n+1)x(n+1) matrix whose rows are the
// barycentric coordinates of M and of the N_j, j != i. Both routes are
// implemented; exact scalars make them agree identically.

namespace detail {

template <class S>
void require_index(const BarycentricPoint<S>& point, std::size_t index) {
  if (index >= point.size()) {
    throw std::out_of_range("vertex index out of range for this simplex");
  }
}

}  // namespace detail

// l_i / (1 - l_i), the ratio |MN_i| / |A_iM| in which the point divides its
// cevian: |MN_i| / |A_iN_i| = l_i, so the complement |A_iM| / |A_iN_i| is
// 1 - l_i, and the quotient of the two segments is l_i / (1 - l_i).
template <class S>
S cevian_ratio(const BarycentricPoint<S>& point, std::size_t index) {
  detail::require_index(point, index);
  point.require_interior();
  return point[index] / (S(1) - point[index]);
}

// Foot of the cevian from vertex `index` through the point: slot `index` is
// exactly zero, the rest are the remaining coordinates rescaled to sum 1.
template <class S>
BarycentricPoint<S> cevian_foot(const BarycentricPoint<S>& point, std::size_t index) {
  detail::require_index(point, index);
  point.require_interior();
  const S denom = S(1) - point[index];
  std::vector<S> coords(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) {
    coords[j] = (j == index) ? S(0) : point[j] / denom;
  }
  return BarycentricPoint<S>(std::move(coords));
}

// V_i / V via the closed-form product.
template <class S>
S volume_ratio_product(const BarycentricPoint<S>& point, std::size_t index) {
  detail::require_index(point, index);
  point.require_interior();
  S result = S(1) - point[index];
  for (std::size_t j = 0; j < point.size(); ++j) {
    result *= point[j] / (S(1) - point[j]);
  }
  return result;
}

// V_i / V via the barycentric determinant. Row 0 holds the point itself, the
// remaining rows hold the feet N_j for j != index, in increasing j.
template <class S>
S volume_ratio_determinant(const BarycentricPoint<S>& point, std::size_t index) {
  detail::require_index(point, index);
  point.require_interior();
  const std::size_t size = point.size();
  std::vector<std::vector<S>> rows;
  rows.reserve(size);
  rows.push_back(point.coords());
  for (std::size_t j = 0; j < size; ++j) {
    if (j == index) continue;
    const S denom = S(1) - point[j];
    std::vector<S> row(size);
    for (std::size_t l = 0; l < size; ++l) {
      row[l] = (l == j) ? S(0) : point[l] / denom;
    }
    rows.push_back(std::move(row));
  }
  const S det = determinant(std::move(rows));
  return scalar_traits<S>::abs(det);
}

// (k - sum of the block) * prod over the block of x/(1-x), for the front
// block of a grouped objective. Every argument must lie strictly in (0, 1).
template <class S>
S front_factor(std::span<const S> block) {
  S sum(0);
  S prod(1);
  for (const S& x : block) {
    if (!(x > S(0) && x < S(1))) {
      throw std::domain_error("front_factor arguments must lie strictly in (0, 1)");
    }
    sum += x;
    prod *= x / (S(1) - x);
  }
  return (S(static_cast<long long>(block.size())) - sum) * prod;
}

// prod over the block of x/(1-x), for the complementary tail block.
template <class S>
S tail_factor(std::span<const S> block) {
  S prod(1);
  for (const S& x : block) {
    if (!(x > S(0) && x < S(1))) {
      throw std::domain_error("tail_factor arguments must lie strictly in (0, 1)");
    }
    prod *= x / (S(1) - x);
  }
  return prod;
}

// Sum of the first k volume ratios:
//   F_k = (k - l_1 - ... - l_k) * prod_{j=1}^{n+1} l_j / (1 - l_j).
// Splitting the product at k gives F_k = front_factor(first k) *
// tail_factor(rest); the direct form below avoids the split.
template <class S>
S partial_ratio_sum(const BarycentricPoint<S>& point, const CevianConfig& config) {
  if (static_cast<std::size_t>(config.n()) != point.dimension()) {
    throw std::invalid_argument("configuration dimension does not match the point");
  }
  point.require_interior();
  const std::size_t k = static_cast<std::size_t>(config.k());
  S sum(0);
  S prod(1);
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (j < k) sum += point[j];
    prod *= point[j] / (S(1) - point[j]);
  }
  return (S(static_cast<long long>(k)) - sum) * prod;
}

// Sum of all n+1 volume ratios: F = n * prod_j l_j / (1 - l_j).
template <class S>
S total_ratio_sum(const BarycentricPoint<S>& point) {
  point.require_interior();
  S prod(1);
  for (std::size_t j = 0; j < point.size(); ++j) {
    prod *= point[j] / (S(1) - point[j]);
  }
  return S(static_cast<long long>(point.dimension())) * prod;
}

template <class S>
RatioBreakdown<S> ratio_breakdown(const BarycentricPoint<S>& point, const CevianConfig& config) {
  if (static_cast<std::size_t>(config.n()) != point.dimension()) {
    throw std::invalid_argument("configuration dimension does not match the point");
  }
  point.require_interior();
  RatioBreakdown<S> out;
  out.per_index.reserve(point.size());
  S full(0);
  S partial(0);
  for (std::size_t i = 0; i < point.size(); ++i) {
    S ratio = volume_ratio_product(point, i);
    full += ratio;
    if (i < static_cast<std::size_t>(config.k())) partial += ratio;
    out.per_index.push_back(std::move(ratio));
  }
  out.partial_sum = std::move(partial);
  out.full_sum = std::move(full);
  return out;
}

}  // namespace cevopt
