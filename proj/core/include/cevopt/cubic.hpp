#pragma once

#include "cevopt/barycentric.hpp"
#include "cevopt/scalar.hpp"

#include <utility>

namespace cevopt {

// Integer cubic q(x) = a3 x^3 + a2 x^2 + a1 x + a0 attached to a block pair
// (k, m). For admissible pairs (k >= 2, m >= 2) its unique root in the open
// interval (0, 1/k) is the critical coordinate of the reduced objective; the
// extended domain k, m >= 0 is kept because the grid search scans it.
struct CubicPoly {
  Int a3;
  Int a2;
  Int a1;
  Int a0;
  long long k = 0;
  long long m = 0;

  bool is_identically_zero() const { return a3 == 0 && a2 == 0 && a1 == 0 && a0 == 0; }
};

// Coefficients:
//   a3 = k^2
//   a2 = -k (k^2 - m^2 - m + 2)
//   a1 = 2 k^2 - k^2 m - k m^2 - m + 1
//   a0 = k (m - 1)
// Equivalently q(x) = (k - x)(1 - kx)(m - 1 + kx) - k m^2 x (1 - x).
// Requires k, m >= 0.
CubicPoly critical_cubic(long long k, long long m);
CubicPoly critical_cubic(const CevianConfig& config);

// Exact evaluation of the expanded form at a rational argument.
Rational eval_exact(const CubicPoly& poly, const Rational& x);

// Exact evaluation of the factored form; must agree with eval_exact.
Rational eval_factored_exact(const CubicPoly& poly, const Rational& x);

// r^3 q(p/r) as an integer, from the expanded coefficients.
Int eval_scaled_expanded(const CubicPoly& poly, const Int& p, const Int& r);

// r^3 q(p/r) as an integer, from the factored form:
//   (k r - p)(r - k p)((m - 1) r + k p) - k m^2 p r (r - p).
Int eval_scaled_factored(const CubicPoly& poly, const Int& p, const Int& r);

// Horner evaluation in binary64.
double eval(const CubicPoly& poly, double x);
double eval_derivative(const CubicPoly& poly, double x);

// Largest coefficient magnitude, for residual scaling. At least 1.
double coefficient_scale(const CubicPoly& poly);

// (q(0), q(1/k)) exactly. For admissible pairs these are k(m-1) > 0 and
// -m^2 (k-1) / k < 0, which brackets the critical root. Requires k >= 1.
std::pair<Rational, Rational> boundary_signs(const CubicPoly& poly);

}  // namespace cevopt
