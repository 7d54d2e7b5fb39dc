#pragma once

#include "cevopt/barycentric.hpp"
#include "cevopt/rng.hpp"

#include <Eigen/Dense>

#include <cstddef>

namespace cevopt {

// Nondegenerate n-simplex embedded in R^n, vertices stored as columns.
// Serves as the measurement side of the dual check: volume ratios computed
// here from actual coordinates must match the barycentric formulas.
class CartesianSimplex {
 public:
  // `vertices` is n x (n+1). Throws std::domain_error when the edge matrix is
  // numerically singular (normalized determinant below 1e-12).
  explicit CartesianSimplex(Eigen::MatrixXd vertices);

  static CartesianSimplex standard(int n);

  // Gaussian vertices, redrawn until the edge matrix is well conditioned
  // (normalized determinant at least 1e-3). Deterministic given the rng state.
  static CartesianSimplex random(int n, Rng& rng);

  int dimension() const { return static_cast<int>(vertices_.rows()); }
  const Eigen::MatrixXd& vertices() const { return vertices_; }
  Eigen::VectorXd vertex(int i) const { return vertices_.col(i); }
  double volume() const { return volume_; }

  // Cartesian location of a barycentric point.
  Eigen::VectorXd point_at(const BarycentricPoint<double>& point) const;

 private:
  Eigen::MatrixXd vertices_;
  double volume_;
};

// Foot of the cevian from vertex `index`, computed by mapping the known
// barycentric foot through the vertex matrix.
Eigen::VectorXd foot_by_coordinates(const CartesianSimplex& simplex,
                                    const BarycentricPoint<double>& point,
                                    std::size_t index);

// The same foot, computed with no barycentric shortcut: intersect the line
// through vertex `index` and the point with the opposite facet's hyperplane
// by solving the (n+1) x (n+1) affine system directly.
Eigen::VectorXd foot_by_intersection(const CartesianSimplex& simplex,
                                     const BarycentricPoint<double>& point,
                                     std::size_t index);

// V_index / V measured geometrically: both foot constructions are compared
// (they must agree to 1e-6 of the simplex diameter), then the sub-simplex
// volume is taken from the intersection feet. Throws std::runtime_error if
// the two constructions disagree.
double measure_geometric(const CartesianSimplex& simplex,
                         const BarycentricPoint<double>& point,
                         std::size_t index);

}  // namespace cevopt
