#pragma once

#include "cevopt/barycentric.hpp"
#include "cevopt/cubic.hpp"

#include <cstdint>

namespace cevopt {

enum class SolveMethod { newton_bisection };

struct OptimumResult {
  double theta;                             // critical coordinate in (0, 1/k)
  double theta_trig;                        // closed-form cross-check
  double max_ratio;                         // objective value at the optimum
  BarycentricPoint<double> equality_point;  // k thetas, then m copies of (1-k theta)/m
  double residual;                          // |q(theta)| / max coefficient
  double bracket_lo;
  double bracket_hi;
  SolveMethod method;
};

// Reduced objective after symmetrization: the first k coordinates equal x,
// the remaining m equal (1 - kx)/m, giving
//   f(x) = k x^k / (1-x)^{k-1} * ((1 - kx) / (m - 1 + kx))^m
// on [0, 1/k], zero at both endpoints. Arguments outside [0, 1/k] throw.
double reduced_objective(double x, const CevianConfig& config);

// f'(x) = k x^{k-1} / (1-x)^k * (1-kx)^{m-1} / (m-1+kx)^{m+1} * q(x) with q
// the critical cubic; shares f's domain.
double reduced_derivative(double x, const CevianConfig& config);

// Root of the critical cubic in (0, 1/k) via the trigonometric solution of
// the depressed cubic. Independent of the iterative path in solve_optimum.
double trigonometric_root(const CevianConfig& config);

// Upper bound 2 theta^2 (1 - 2 theta) / 3 for the two-of-four block sum; the
// bound every pair sum obeys in dimension 3.
double tetrahedron_pair_bound(double theta);

// Symmetric point with front coordinate x: (x, ..., x, (1-kx)/m, ..., (1-kx)/m).
BarycentricPoint<double> symmetric_point(double x, const CevianConfig& config);

// Isolates the critical root: exact sign check at the interval ends, bisection
// down to width 1e-4, then Newton with bisection fallback until the bracket
// width is at most `tolerance`. The trigonometric root must agree to 1e-12.
OptimumResult solve_optimum(const CevianConfig& config, double tolerance = 1e-14);

}  // namespace cevopt
