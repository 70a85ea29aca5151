#include "hallpost/couplings.hpp"

#include <cmath>
#include <string>

#include "hallpost/errors.hpp"

namespace hallpost {

double beta_from_g(double g) {
  require(std::isfinite(g), "beta_from_g: coupling must be finite");
  require(g >= kCollapseCoupling,
          "beta_from_g: g = " + std::to_string(g) + " < -1/4 (inverse-square collapse)");
  return 0.5 + 0.5 * std::sqrt(1.0 + 4.0 * g);
}

double g_from_beta(double beta) {
  require(std::isfinite(beta), "g_from_beta: exponent must be finite");
  require(beta >= 0.5, "g_from_beta: beta = " + std::to_string(beta) +
                           " < 1/2 selects the non-physical root");
  return beta * (beta - 1.0);
}

double beta_from_g_ddim(double g, int dim) {
  require(dim >= 2, "beta_from_g_ddim: dimension must be >= 2");
  require(std::isfinite(g) && g >= 0.0, "beta_from_g_ddim: g must be finite and >= 0");
  // Nonnegative root of beta^2 + (D-2) beta - g = 0 in the cancellation-free
  // form 2g / ((D-2) + sqrt((D-2)^2 + 4g)). At D = 2, g = 0 the denominator
  // vanishes; that point is beta = 0.
  const double shift = dim - 2.0;
  const double denom = shift + std::sqrt(shift * shift + 4.0 * g);
  if (denom == 0.0) return 0.0;
  return 2.0 * g / denom;
}

double g_from_beta_ddim(double beta, int dim) {
  require(dim >= 2, "g_from_beta_ddim: dimension must be >= 2");
  require(std::isfinite(beta) && beta >= 0.0, "g_from_beta_ddim: beta must be >= 0");
  return beta * beta + (dim - 2.0) * beta;
}

double three_body_from_two_body(double g, int dim) {
  const double beta = beta_from_g_ddim(g, dim);
  return beta * beta;
}

InverseSquarePair InverseSquarePair::from_g(double g) { return {g, beta_from_g(g)}; }

InverseSquarePair InverseSquarePair::from_beta(double beta) {
  return {g_from_beta(beta), beta};
}

DimensionedCoupling DimensionedCoupling::from_g(double g, int dim) {
  const double beta = beta_from_g_ddim(g, dim);
  return {dim, g, beta * beta, beta};
}

DimensionedCoupling DimensionedCoupling::from_beta(double beta, int dim) {
  return {dim, g_from_beta_ddim(beta, dim), beta * beta, beta};
}

}  // namespace hallpost
