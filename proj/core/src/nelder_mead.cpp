#include "cevopt/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cevopt {

namespace {

struct Vertex {
  std::vector<double> point;
  double value;  // negated objective; minimized below
};

}  // namespace

NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)>& objective,
                                      std::span<const double> start,
                                      std::span<const double> steps,
                                      const NelderMeadOptions& options) {
  const std::size_t dim = start.size();
  if (dim == 0) throw std::invalid_argument("nelder_mead_maximize needs at least one dimension");
  if (steps.size() != dim) throw std::invalid_argument("steps size must match start size");

  const auto eval = [&](const std::vector<double>& p) { return -objective(p); };

  std::vector<Vertex> simplex;
  simplex.reserve(dim + 1);
  simplex.push_back({std::vector<double>(start.begin(), start.end()), 0.0});
  simplex[0].value = eval(simplex[0].point);
  if (!std::isfinite(simplex[0].value)) {
    throw std::invalid_argument("nelder_mead_maximize start point was rejected");
  }
  for (std::size_t j = 0; j < dim; ++j) {
    Vertex v{simplex[0].point, 0.0};
    v.point[j] += steps[j];
    v.value = eval(v.point);
    simplex.push_back(std::move(v));
  }

  const auto by_value = [](const Vertex& a, const Vertex& b) { return a.value < b.value; };
  std::stable_sort(simplex.begin(), simplex.end(), by_value);

  // Max-norm diameter relative to the best vertex. Equal values alone are not
  // convergence: two vertices straddling a maximum agree in value while the
  // simplex is still wide, and contraction keeps halving the diameter.
  const auto diameter = [&] {
    double spread = 0.0;
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        spread = std::max(spread, std::fabs(simplex[i].point[j] - simplex[0].point[j]));
      }
    }
    return spread;
  };

  int iterations = 0;
  while (iterations < options.max_iterations) {
    const double best = simplex.front().value;
    const double worst = simplex.back().value;
    if (std::isfinite(worst) && worst - best < options.spread_tolerance &&
        diameter() < options.point_tolerance) {
      break;
    }
    ++iterations;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i].point[j];
    }
    for (auto& c : centroid) c /= static_cast<double>(dim);

    const auto blend = [&](double coeff) {
      std::vector<double> p(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        p[j] = centroid[j] + coeff * (simplex.back().point[j] - centroid[j]);
      }
      return p;
    };

    std::vector<double> reflected = blend(-1.0);
    const double reflected_value = eval(reflected);

    bool shrink = false;
    if (reflected_value < simplex.front().value) {
      std::vector<double> expanded = blend(-2.0);
      const double expanded_value = eval(expanded);
      if (expanded_value < reflected_value) {
        simplex.back() = {std::move(expanded), expanded_value};
      } else {
        simplex.back() = {std::move(reflected), reflected_value};
      }
    } else if (reflected_value < simplex[dim - 1].value) {
      simplex.back() = {std::move(reflected), reflected_value};
    } else if (reflected_value < simplex.back().value) {
      std::vector<double> contracted = blend(-0.5);  // outside contraction
      const double contracted_value = eval(contracted);
      if (contracted_value <= reflected_value) {
        simplex.back() = {std::move(contracted), contracted_value};
      } else {
        shrink = true;
      }
    } else {
      std::vector<double> contracted = blend(0.5);  // inside contraction
      const double contracted_value = eval(contracted);
      if (contracted_value < simplex.back().value) {
        simplex.back() = {std::move(contracted), contracted_value};
      } else {
        shrink = true;
      }
    }

    if (shrink) {
      for (std::size_t i = 1; i <= dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          simplex[i].point[j] = simplex[0].point[j] + 0.5 * (simplex[i].point[j] - simplex[0].point[j]);
        }
        simplex[i].value = eval(simplex[i].point);
      }
    }

    std::stable_sort(simplex.begin(), simplex.end(), by_value);
  }

  return NelderMeadResult{simplex.front().point, -simplex.front().value, iterations};
}

}  // namespace cevopt
