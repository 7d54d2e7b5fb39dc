#include "cevopt/optimum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cevopt {

namespace {

double ipow(double base, int exp) {
  double result = 1.0;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

void require_domain(double x, int k) {
  if (!(x >= 0.0) || x > 1.0 / static_cast<double>(k)) {
    throw std::domain_error("argument outside the objective domain [0, 1/k]");
  }
}

}  // namespace

double reduced_objective(double x, const CevianConfig& config) {
  const int k = config.k();
  const int m = config.m();
  require_domain(x, k);
  if (x == 0.0) return 0.0;
  const double u = 1.0 - k * x;
  if (u <= 0.0) return 0.0;
  return k * ipow(x, k) / ipow(1.0 - x, k - 1) * ipow(u / (m - 1 + k * x), m);
}

double reduced_derivative(double x, const CevianConfig& config) {
  const int k = config.k();
  const int m = config.m();
  require_domain(x, k);
  // k >= 2 and m >= 2, so x^{k-1} and (1-kx)^{m-1} vanish at the endpoints.
  if (x == 0.0) return 0.0;
  const double u = 1.0 - k * x;
  if (u <= 0.0) return 0.0;
  const CubicPoly q = critical_cubic(config);
  const double prefactor =
      k * ipow(x, k - 1) / ipow(1.0 - x, k) * ipow(u, m - 1) / ipow(m - 1 + k * x, m + 1);
  return prefactor * eval(q, x);
}

double trigonometric_root(const CevianConfig& config) {
  const CubicPoly poly = critical_cubic(config);
  const double a3 = static_cast<double>(poly.a3);
  const double a2 = static_cast<double>(poly.a2);
  const double a1 = static_cast<double>(poly.a1);
  const double a0 = static_cast<double>(poly.a0);

  // Depress: x = t - a2/(3 a3), t^3 + pt + q = 0. The critical cubic has
  // three real roots for admissible (k, m), so the discriminant condition
  // 4p^3 + 27q^2 <= 0 holds and the three-cosines form applies.
  const double b = a2 / a3;
  const double c = a1 / a3;
  const double d = a0 / a3;
  const double shift = b / 3.0;
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  if (!(p < 0.0)) {
    throw std::runtime_error("trigonometric form needs three real roots");
  }
  const double radius = 2.0 * std::sqrt(-p / 3.0);
  double cos_arg = 3.0 * q / (p * radius);
  cos_arg = std::clamp(cos_arg, -1.0, 1.0);
  const double angle = std::acos(cos_arg) / 3.0;

  const double upper = 1.0 / static_cast<double>(config.k());
  double root = -1.0;
  int found = 0;
  for (int j = 0; j < 3; ++j) {
    const double t = radius * std::cos(angle - 2.0 * std::numbers::pi * j / 3.0);
    const double candidate = t - shift;
    if (candidate > 0.0 && candidate < upper) {
      root = candidate;
      ++found;
    }
  }
  if (found != 1) {
    throw std::runtime_error("expected exactly one cubic root inside (0, 1/k)");
  }
  return root;
}

double tetrahedron_pair_bound(double theta) {
  return 2.0 * theta * theta * (1.0 - 2.0 * theta) / 3.0;
}

BarycentricPoint<double> symmetric_point(double x, const CevianConfig& config) {
  const int k = config.k();
  const int m = config.m();
  std::vector<double> coords(static_cast<std::size_t>(config.n()) + 1);
  const double tail = (1.0 - k * x) / m;
  for (int j = 0; j < k; ++j) coords[static_cast<std::size_t>(j)] = x;
  for (int j = k; j <= config.n(); ++j) coords[static_cast<std::size_t>(j)] = tail;
  return BarycentricPoint<double>(std::move(coords));
}

OptimumResult solve_optimum(const CevianConfig& config, double tolerance) {
  if (!(tolerance >= 1e-15)) {
    throw std::invalid_argument("tolerance must be at least 1e-15");
  }
  const CubicPoly poly = critical_cubic(config);

  // Exact bracket certificate before any floating-point iteration.
  const auto [at_zero, at_upper] = boundary_signs(poly);
  if (!(at_zero > 0 && at_upper < 0)) {
    throw std::logic_error("bracket sign certificate failed for an admissible pair");
  }

  double lo = 0.0;
  double hi = 1.0 / static_cast<double>(config.k());

  // Plain bisection until the bracket is narrow enough for Newton to be safe.
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eval(poly, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // Newton from the midpoint, falling back to bisection whenever the step
  // leaves the bracket or fails to shrink it. The sign invariant
  // q(lo) > 0 > q(hi) is maintained throughout.
  double x = 0.5 * (lo + hi);
  while (hi - lo > tolerance) {
    const double value = eval(poly, x);
    if (value > 0.0) {
      lo = x;
    } else if (value < 0.0) {
      hi = x;
    } else {
      lo = x;
      hi = x;
      break;
    }
    const double slope = eval_derivative(poly, x);
    double next = (slope != 0.0) ? x - value / slope : lo;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (next <= lo || next >= hi) break;  // bracket exhausted at this precision
    x = next;
  }

  const double theta = 0.5 * (lo + hi);
  const double residual = std::fabs(eval(poly, theta)) / coefficient_scale(poly);
  const double theta_trig = trigonometric_root(config);
  if (std::fabs(theta - theta_trig) > 1e-12) {
    throw std::runtime_error("iterative and closed-form roots disagree beyond 1e-12");
  }

  return OptimumResult{theta,
                       theta_trig,
                       reduced_objective(theta, config),
                       symmetric_point(theta, config),
                       residual,
                       lo,
                       hi,
                       SolveMethod::newton_bisection};
}

}  // namespace cevopt
