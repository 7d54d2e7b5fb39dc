#pragma once

#include "cevopt/scalar.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cevopt {

// Point of an n-simplex in barycentric coordinates: n+1 weights summing to 1.
// The constructor accepts inputs whose sum deviates from 1 by at most 1e-9
// and renormalizes; anything farther off is rejected as malformed rather than
// silently rescaled.
template <class S>
class BarycentricPoint {
 public:
  explicit BarycentricPoint(std::vector<S> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 3) {
      throw std::invalid_argument("a barycentric point needs at least 3 coordinates");
    }
    S sum(0);
    for (const auto& c : coords_) sum += c;
    const S deviation = scalar_traits<S>::abs(sum - S(1));
    if (deviation > scalar_traits<S>::ratio(1, 1000000000)) {
      std::ostringstream msg;
      msg << "barycentric coordinates sum to " << sum << ", expected 1";
      throw std::invalid_argument(msg.str());
    }
    if (sum != S(1)) {
      for (auto& c : coords_) c /= sum;
    }
  }

  std::size_t size() const { return coords_.size(); }
  std::size_t dimension() const { return coords_.size() - 1; }
  const S& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<S>& coords() const { return coords_; }

  bool is_interior() const {
    for (const auto& c : coords_) {
      if (!(c > S(0) && c < S(1))) return false;
    }
    return true;
  }

  void require_interior() const {
    if (!is_interior()) {
      throw std::domain_error(
          "barycentric point must be interior: every coordinate strictly between 0 and 1");
    }
  }

  friend bool operator==(const BarycentricPoint& a, const BarycentricPoint& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<S> coords_;
};

// Grouping of the n+1 vertices of an n-simplex into a front block of k and a
// tail block of m = n+1-k. Both blocks must contain at least 2 vertices.
class CevianConfig {
 public:
  CevianConfig(int n, int k) : n_(n), k_(k) {
    if (n < 3 || k <= 1 || k >= n) {
      throw std::invalid_argument("group size k must satisfy 1 < k < n");
    }
  }

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return n_ + 1 - k_; }

 private:
  int n_;
  int k_;
};

template <class S>
struct RatioBreakdown {
  std::vector<S> per_index;  // one volume ratio per vertex
  S partial_sum;             // sum over the front block of size k
  S full_sum;                // sum over all n+1 vertices
};

}  // namespace cevopt
