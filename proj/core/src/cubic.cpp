#include "cevopt/cubic.hpp"

#include <cmath>
#include <stdexcept>

namespace cevopt {

CubicPoly critical_cubic(long long k, long long m) {
  if (k < 0 || m < 0) {
    throw std::invalid_argument("critical_cubic requires k >= 0 and m >= 0");
  }
  const Int K(k);
  const Int M(m);
  CubicPoly poly;
  poly.a3 = K * K;
  poly.a2 = -K * (K * K - M * M - M + 2);
  poly.a1 = 2 * K * K - K * K * M - K * M * M - M + 1;
  poly.a0 = K * (M - 1);
  poly.k = k;
  poly.m = m;
  return poly;
}

CubicPoly critical_cubic(const CevianConfig& config) {
  return critical_cubic(config.k(), config.m());
}

Rational eval_exact(const CubicPoly& poly, const Rational& x) {
  return ((Rational(poly.a3) * x + Rational(poly.a2)) * x + Rational(poly.a1)) * x +
         Rational(poly.a0);
}

Rational eval_factored_exact(const CubicPoly& poly, const Rational& x) {
  const Rational K(poly.k);
  const Rational M(poly.m);
  return (K - x) * (Rational(1) - K * x) * (M - Rational(1) + K * x) -
         K * M * M * x * (Rational(1) - x);
}

Int eval_scaled_expanded(const CubicPoly& poly, const Int& p, const Int& r) {
  return ((poly.a3 * p + poly.a2 * r) * p + poly.a1 * r * r) * p + poly.a0 * r * r * r;
}

Int eval_scaled_factored(const CubicPoly& poly, const Int& p, const Int& r) {
  const Int K(poly.k);
  const Int M(poly.m);
  return (K * r - p) * (r - K * p) * ((M - 1) * r + K * p) - K * M * M * p * r * (r - p);
}

double eval(const CubicPoly& poly, double x) {
  const double a3 = static_cast<double>(poly.a3);
  const double a2 = static_cast<double>(poly.a2);
  const double a1 = static_cast<double>(poly.a1);
  const double a0 = static_cast<double>(poly.a0);
  return ((a3 * x + a2) * x + a1) * x + a0;
}

double eval_derivative(const CubicPoly& poly, double x) {
  const double a3 = static_cast<double>(poly.a3);
  const double a2 = static_cast<double>(poly.a2);
  const double a1 = static_cast<double>(poly.a1);
  return (3.0 * a3 * x + 2.0 * a2) * x + a1;
}

double coefficient_scale(const CubicPoly& poly) {
  double scale = 1.0;
  for (const Int* c : {&poly.a3, &poly.a2, &poly.a1, &poly.a0}) {
    scale = std::max(scale, std::fabs(static_cast<double>(*c)));
  }
  return scale;
}

std::pair<Rational, Rational> boundary_signs(const CubicPoly& poly) {
  if (poly.k < 1) {
    throw std::invalid_argument("boundary_signs requires k >= 1 to form 1/k");
  }
  return {Rational(poly.a0), eval_exact(poly, Rational(1, poly.k))};
}

}  // namespace cevopt
