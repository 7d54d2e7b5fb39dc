#include "cevopt/oracle.hpp"

#include "cevopt/nelder_mead.hpp"
#include "cevopt/parallel.hpp"
#include "cevopt/rng.hpp"
#include "cevopt/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cevopt {

namespace {

constexpr double kInteriorMargin = 1e-9;

// Objective over the n free coordinates; the last coordinate is 1 - sum.
// Points outside the open simplex (with margin) are rejected via -infinity.
double blocked_sum(std::span<const double> free_coords, const CevianConfig& config) {
  std::vector<double> lambda(free_coords.begin(), free_coords.end());
  double sum = 0.0;
  for (const double v : lambda) sum += v;
  lambda.push_back(1.0 - sum);
  for (const double v : lambda) {
    if (!(v > kInteriorMargin && v < 1.0 - kInteriorMargin)) {
      return -std::numeric_limits<double>::infinity();
    }
  }
  return partial_ratio_sum(BarycentricPoint<double>(std::move(lambda)), config);
}

}  // namespace

OracleReport maximize_direct(const CevianConfig& config, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("maximize_direct needs at least one restart");
  const OptimumResult predicted = solve_optimum(config);
  const std::size_t n = static_cast<std::size_t>(config.n());

  const auto objective = [&](std::span<const double> z) { return blocked_sum(z, config); };

  std::vector<NelderMeadResult> results(static_cast<std::size_t>(restarts));
  parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t r) {
    Rng rng = Rng::stream(seed, r);
    const std::vector<double> lambda0 = uniform_simplex_point(rng, n + 1);
    std::vector<double> z0(lambda0.begin(), lambda0.end() - 1);
    std::vector<double> steps(n);
    for (std::size_t j = 0; j < n; ++j) {
      steps[j] = 0.05 * std::min(z0[j], lambda0[n]);
    }
    NelderMeadResult coarse = nelder_mead_maximize(objective, z0, steps);

    // Polish: restart from the coarse optimum with small steps to undo any
    // simplex collapse along the way.
    double tail = 1.0;
    for (const double v : coarse.point) tail -= v;
    std::vector<double> polish_steps(n);
    for (std::size_t j = 0; j < n; ++j) {
      polish_steps[j] = std::max(1e-3 * std::min(coarse.point[j], tail), 1e-9);
    }
    NelderMeadOptions polish_options;
    polish_options.max_iterations = 2000;
    NelderMeadResult fine = nelder_mead_maximize(objective, coarse.point, polish_steps, polish_options);
    results[r] = (fine.value >= coarse.value) ? std::move(fine) : std::move(coarse);
  });

  std::size_t best_index = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (results[r].value > results[best_index].value) best_index = r;
  }
  const NelderMeadResult& best = results[best_index];

  std::vector<double> lambda(best.point);
  double sum = 0.0;
  for (const double v : lambda) sum += v;
  lambda.push_back(1.0 - sum);
  BarycentricPoint<double> best_point{std::move(lambda)};

  // Both blocks are symmetric under permutation, so compare sorted blocks.
  const std::size_t k = static_cast<std::size_t>(config.k());
  std::vector<double> found = best_point.coords();
  std::vector<double> target = predicted.equality_point.coords();
  std::sort(found.begin(), found.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(found.begin() + static_cast<std::ptrdiff_t>(k), found.end());
  std::sort(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(target.begin() + static_cast<std::ptrdiff_t>(k), target.end());
  double argmax_distance = 0.0;
  for (std::size_t j = 0; j < found.size(); ++j) {
    argmax_distance = std::max(argmax_distance, std::fabs(found[j] - target[j]));
  }

  return OracleReport{best.value,
                      std::move(best_point),
                      restarts,
                      std::fabs(best.value - predicted.max_ratio),
                      argmax_distance,
                      seed};
}

double check_derivative(const CevianConfig& config, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("check_derivative needs at least one sample");
  const int k = config.k();
  const double upper = 1.0 / static_cast<double>(k);
  const double h = 1e-6 / static_cast<double>(k);

  Rng rng = Rng::stream(seed, 0);
  std::vector<double> analytic(static_cast<std::size_t>(samples));
  std::vector<double> finite(static_cast<std::size_t>(samples));
  double scale = 0.0;
  for (int i = 0; i < samples; ++i) {
    // Stay one step away from the endpoints so x +- h remains in-domain.
    const double x = rng.uniform(2.0 * h, upper - 2.0 * h);
    analytic[static_cast<std::size_t>(i)] = reduced_derivative(x, config);
    finite[static_cast<std::size_t>(i)] =
        (reduced_objective(x + h, config) - reduced_objective(x - h, config)) / (2.0 * h);
    scale = std::max(scale, std::fabs(analytic[static_cast<std::size_t>(i)]));
  }

  const double floor = std::max(1e-3 * scale, 1e-300);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double a = analytic[static_cast<std::size_t>(i)];
    const double f = finite[static_cast<std::size_t>(i)];
    const double denom = std::max({std::fabs(a), std::fabs(f), floor});
    worst = std::max(worst, std::fabs(a - f) / denom);
  }
  return worst;
}

}  // namespace cevopt
