#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hallpost/couplings.hpp"
#include "hallpost/errors.hpp"
#include "hallpost/oracle.hpp"

namespace hallpost::oracle {

RadialProblem RadialProblem::oscillator(double omega, double g) {
  require(std::isfinite(omega) && omega > 0.0, "radial oscillator: omega must be > 0");
  RadialProblem p;
  p.kind = RadialKind::Oscillator;
  p.g = g;
  p.omega = omega;
  p.x_max = 12.0 / std::sqrt(omega);
  p.validate();
  return p;
}

RadialProblem RadialProblem::coulomb(double lambda, double g) {
  require(std::isfinite(lambda) && lambda > 0.0, "radial coulomb: lambda must be > 0");
  RadialProblem p;
  p.kind = RadialKind::Coulomb;
  p.g = g;
  p.lambda = lambda;
  // u ~ x^beta exp(-lambda x / (2 beta)); 40 beta / lambda is twenty decay lengths.
  p.x_max = 40.0 * beta_from_g(g) / lambda;
  p.validate();
  return p;
}

void RadialProblem::validate() const {
  require(std::isfinite(g) && g >= kCollapseCoupling, "radial problem: g must be >= -1/4");
  if (kind == RadialKind::Oscillator) {
    require(std::isfinite(omega) && omega > 0.0, "radial problem: omega must be > 0");
  } else {
    require(std::isfinite(lambda) && lambda > 0.0, "radial problem: lambda must be > 0");
  }
  require(std::isfinite(x_min) && x_min >= 0.0, "radial problem: x_min must be >= 0");
  require(std::isfinite(x_max) && x_max > x_min, "radial problem: need x_min < x_max");
  require(grid_points >= 64, "radial problem: need at least 64 grid points");
}

double RadialProblem::potential(double x) const {
  const double wall = g / (x * x);
  if (kind == RadialKind::Oscillator) return wall + 0.25 * omega * omega * x * x;
  return wall - lambda / x;
}

int sturm_count(std::span<const double> diag, std::span<const double> offdiag, double x) {
  // LDL^T pivots of (T - x I); each negative pivot is one eigenvalue below x.
  const double tiny = std::numeric_limits<double>::min();
  int count = 0;
  double q = diag[0] - x;
  if (q == 0.0) q = -tiny;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    q = diag[i] - x - offdiag[i - 1] * offdiag[i - 1] / q;
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

double lowest_eigenvalue(std::span<const double> diag, std::span<const double> offdiag) {
  require(!diag.empty() && offdiag.size() + 1 == diag.size(),
          "lowest_eigenvalue: inconsistent tridiagonal sizes");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(offdiag[i - 1]);
    if (i + 1 < diag.size()) radius += std::abs(offdiag[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 256; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi))) break;
    if (sturm_count(diag, offdiag, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

double discretized_ground_state(const RadialProblem& p, int interior) {
  const double h = (p.x_max - p.x_min) / (interior + 1.0);
  const double kinetic = 1.0 / (h * h);
  std::vector<double> diag(static_cast<std::size_t>(interior));
  std::vector<double> offdiag(static_cast<std::size_t>(interior - 1), -kinetic);
  for (int i = 0; i < interior; ++i) {
    const double x = p.x_min + (i + 1.0) * h;
    diag[static_cast<std::size_t>(i)] = 2.0 * kinetic + p.potential(x);
  }
  return lowest_eigenvalue(diag, offdiag);
}

}  // namespace

RadialSolution solve_two_body_radial_detailed(const RadialProblem& problem) {
  problem.validate();
  // n, 2n+1, 4n+3 interior points halve the spacing at each level.
  const int n0 = problem.grid_points;
  const int n1 = 2 * n0 + 1;
  const int n2 = 2 * n1 + 1;
  const double e0 = discretized_ground_state(problem, n0);
  const double e1 = discretized_ground_state(problem, n1);
  const double e2 = discretized_ground_state(problem, n2);

  RadialSolution s;
  s.coarse_energy = (4.0 * e1 - e0) / 3.0;
  s.energy = (4.0 * e2 - e1) / 3.0;
  s.raw_energy = e2;
  const double scale = std::max(std::abs(s.energy), std::numeric_limits<double>::min());
  if (std::abs(s.energy - s.coarse_energy) > 1e-5 * scale) {
    throw ConvergenceError("solve_two_body_radial: Richardson estimates " +
                           std::to_string(s.coarse_energy) + " and " + std::to_string(s.energy) +
                           " differ by more than 1e-5 relative");
  }
  return s;
}

double solve_two_body_radial(const RadialProblem& problem) {
  return solve_two_body_radial_detailed(problem).energy;
}

}  // namespace hallpost::oracle
