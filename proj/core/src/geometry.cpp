#include "cevopt/geometry.hpp"

#include "cevopt/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace cevopt {

namespace {

double factorial(int n) {
  double result = 1.0;
  for (int i = 2; i <= n; ++i) result *= static_cast<double>(i);
  return result;
}

Eigen::MatrixXd edge_matrix(const Eigen::MatrixXd& vertices) {
  const auto n = vertices.rows();
  Eigen::MatrixXd edges(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    edges.col(j) = vertices.col(j + 1) - vertices.col(0);
  }
  return edges;
}

// |det| scaled by the column norms; 1 for an orthogonal frame, 0 when flat.
double normalized_determinant(const Eigen::MatrixXd& edges) {
  double norm_product = 1.0;
  for (Eigen::Index j = 0; j < edges.cols(); ++j) {
    const double len = edges.col(j).norm();
    if (len == 0.0) return 0.0;
    norm_product *= len;
  }
  return std::fabs(edges.determinant()) / norm_product;
}

double diameter(const Eigen::MatrixXd& vertices) {
  double result = 0.0;
  for (Eigen::Index a = 0; a < vertices.cols(); ++a) {
    for (Eigen::Index b = a + 1; b < vertices.cols(); ++b) {
      result = std::max(result, (vertices.col(a) - vertices.col(b)).norm());
    }
  }
  return result;
}

void require_matching(const CartesianSimplex& simplex, const BarycentricPoint<double>& point) {
  if (point.size() != static_cast<std::size_t>(simplex.dimension()) + 1) {
    throw std::invalid_argument("barycentric point does not match the simplex dimension");
  }
}

}  // namespace

CartesianSimplex::CartesianSimplex(Eigen::MatrixXd vertices) : vertices_(std::move(vertices)) {
  if (vertices_.rows() < 2 || vertices_.cols() != vertices_.rows() + 1) {
    throw std::invalid_argument("an n-simplex in R^n needs an n x (n+1) vertex matrix");
  }
  const Eigen::MatrixXd edges = edge_matrix(vertices_);
  if (normalized_determinant(edges) < 1e-12) {
    throw std::domain_error("degenerate simplex: edge matrix is numerically singular");
  }
  volume_ = std::fabs(edges.determinant()) / factorial(dimension());
}

CartesianSimplex CartesianSimplex::standard(int n) {
  if (n < 2) throw std::invalid_argument("standard simplex needs dimension at least 2");
  Eigen::MatrixXd vertices = Eigen::MatrixXd::Zero(n, n + 1);
  for (int j = 0; j < n; ++j) vertices(j, j + 1) = 1.0;
  return CartesianSimplex(std::move(vertices));
}

CartesianSimplex CartesianSimplex::random(int n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("random simplex needs dimension at least 2");
  while (true) {
    Eigen::MatrixXd vertices(n, n + 1);
    for (Eigen::Index j = 0; j < vertices.cols(); ++j) {
      for (Eigen::Index i = 0; i < vertices.rows(); ++i) {
        // Box-Muller from the deterministic stream; std::normal_distribution
        // would not be reproducible across standard libraries.
        const double u1 = std::max(rng.uniform01(), 1e-300);
        const double u2 = rng.uniform01();
        vertices(i, j) = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
      }
    }
    if (normalized_determinant(edge_matrix(vertices)) >= 1e-3) {
      return CartesianSimplex(std::move(vertices));
    }
  }
}

Eigen::VectorXd CartesianSimplex::point_at(const BarycentricPoint<double>& point) const {
  require_matching(*this, point);
  Eigen::VectorXd weights(static_cast<Eigen::Index>(point.size()));
  for (std::size_t i = 0; i < point.size(); ++i) {
    weights(static_cast<Eigen::Index>(i)) = point[i];
  }
  return vertices_ * weights;
}

Eigen::VectorXd foot_by_coordinates(const CartesianSimplex& simplex,
                                    const BarycentricPoint<double>& point,
                                    std::size_t index) {
  require_matching(simplex, point);
  return simplex.point_at(cevian_foot(point, index));
}

Eigen::VectorXd foot_by_intersection(const CartesianSimplex& simplex,
                                     const BarycentricPoint<double>& point,
                                     std::size_t index) {
  require_matching(simplex, point);
  point.require_interior();
  const int n = simplex.dimension();
  const Eigen::VectorXd m = simplex.point_at(point);
  const Eigen::VectorXd a = simplex.vertex(static_cast<int>(index));

  // Unknowns: facet weights c_j (j != index) and the line parameter t, where
  // the foot is a + t (m - a) and also sum_j c_j A_j with sum_j c_j = 1.
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(n + 1, n + 1);
  Eigen::VectorXd rhs(n + 1);
  int col = 0;
  for (int j = 0; j <= n; ++j) {
    if (j == static_cast<int>(index)) continue;
    system.block(0, col, n, 1) = simplex.vertex(j);
    system(n, col) = 1.0;
    ++col;
  }
  system.block(0, n, n, 1) = -(m - a);
  system(n, n) = 0.0;
  rhs.head(n) = a;
  rhs(n) = 1.0;

  const Eigen::VectorXd solution = Eigen::FullPivLU<Eigen::MatrixXd>(system).solve(rhs);
  return a + solution(n) * (m - a);
}

double measure_geometric(const CartesianSimplex& simplex,
                         const BarycentricPoint<double>& point,
                         std::size_t index) {
  require_matching(simplex, point);
  point.require_interior();
  if (index >= point.size()) throw std::out_of_range("vertex index out of range");
  const int n = simplex.dimension();
  const double scale = std::max(1.0, diameter(simplex.vertices()));

  const Eigen::VectorXd m = simplex.point_at(point);
  Eigen::MatrixXd spans(n, n);
  int col = 0;
  for (int j = 0; j <= n; ++j) {
    if (j == static_cast<int>(index)) continue;
    const Eigen::VectorXd direct = foot_by_intersection(simplex, point, static_cast<std::size_t>(j));
    const Eigen::VectorXd mapped = foot_by_coordinates(simplex, point, static_cast<std::size_t>(j));
    if ((direct - mapped).norm() > 1e-6 * scale) {
      throw std::runtime_error("cevian foot cross-check failed: intersection and mapping disagree");
    }
    spans.col(col++) = direct - m;
  }
  const double sub_volume = std::fabs(spans.determinant()) / factorial(n);
  return sub_volume / simplex.volume();
}

}  // namespace cevopt
