#pragma once

// Maps between inverse-square coupling strengths and the Jastrow exponents
// of the exact ground states.
//
// One dimension:  g = beta (beta - 1), beta >= 1/2 (positive root).
// D dimensions:   g = G + (D - 2) sqrt(G), G = beta^2, beta >= 0.

namespace hallpost {

/// Lower edge of the stable inverse-square strip in one dimension.
inline constexpr double kCollapseCoupling = -0.25;

double beta_from_g(double g);
double g_from_beta(double beta);

double beta_from_g_ddim(double g, int dim);
double g_from_beta_ddim(double beta, int dim);

/// G(g): three-body strength tied to the two-body strength in D dimensions.
double three_body_from_two_body(double g, int dim);

/// Coupling pair for a one-dimensional 1/x^2 interaction. Always holds the
/// positive root, so beta() >= 1/2.
class InverseSquarePair {
public:
  static InverseSquarePair from_g(double g);
  static InverseSquarePair from_beta(double beta);

  double g() const { return g_; }
  double beta() const { return beta_; }

private:
  InverseSquarePair(double g, double beta) : g_(g), beta_(beta) {}
  double g_;
  double beta_;
};

/// Two- and three-body couplings of the D-dimensional model, constrained so
/// that G = beta^2 and g = G + (D - 2) beta.
class DimensionedCoupling {
public:
  static DimensionedCoupling from_g(double g, int dim);
  static DimensionedCoupling from_beta(double beta, int dim);

  int dim() const { return dim_; }
  double g() const { return g_; }
  double three_body() const { return three_body_; }
  double beta() const { return beta_; }

private:
  DimensionedCoupling(int dim, double g, double three_body, double beta)
      : dim_(dim), g_(g), three_body_(three_body), beta_(beta) {}
  int dim_;
  double g_;
  double three_body_;
  double beta_;
};

}  // namespace hallpost
