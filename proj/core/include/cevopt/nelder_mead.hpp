#pragma once

#include <functional>
#include <span>
#include <vector>

namespace cevopt {

struct NelderMeadOptions {
  double spread_tolerance = 1e-12;  // stop when max-min vertex value is below
  double point_tolerance = 1e-8;    // ... and the simplex diameter too
  int max_iterations = 5000;
};

struct NelderMeadResult {
  std::vector<double> point;
  double value;
  int iterations;
};

// Derivative-free simplex ascent. The objective may return -infinity to
// reject a point, which acts as a hard barrier. Starts from `start` with one
// extra vertex per dimension, offset by the matching entry of `steps`.
// Deterministic: ties are broken by stable ordering, no randomness inside.
NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)>& objective,
                                      std::span<const double> start,
                                      std::span<const double> steps,
                                      const NelderMeadOptions& options = {});

}  // namespace cevopt
