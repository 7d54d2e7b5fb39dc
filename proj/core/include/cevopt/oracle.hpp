#pragma once

#include "cevopt/barycentric.hpp"
#include "cevopt/optimum.hpp"

#include <cstdint>

namespace cevopt {

// Result of the derivative-free maximizer of the k-block ratio sum, run as an
// independent check against the closed-form optimum.
struct OracleReport {
  double best_value;
  BarycentricPoint<double> best_point;
  int restarts;
  double agreement_abs;    // |best_value - predicted maximum|
  double argmax_distance;  // max-norm distance between sorted blocks
  std::uint64_t seed;
};

// Multi-start Nelder-Mead over the n free coordinates (the last one is
// eliminated), with an interior barrier at 1e-9. Restarts run in parallel with
// per-restart derived seeds; results are merged by value with index as the
// tie-break, so the report does not depend on the thread count.
OracleReport maximize_direct(const CevianConfig& config, int restarts, std::uint64_t seed);

// Central finite differences of the reduced objective against the analytic
// derivative at `samples` uniform random points of (0, 1/k). Returns the
// worst relative error, with the denominator floored at 1e-3 of the largest
// analytic magnitude so near-zero crossings compare absolutely.
double check_derivative(const CevianConfig& config, int samples, std::uint64_t seed);

}  // namespace cevopt
