#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hallpost/models.hpp"

// Numerical checks that do not go through the closed-form energies.

namespace hallpost::oracle {

enum class Derivative { Analytic, FiniteDifference };

/// (H psi)(x) / psi(x) for the Calogero Hamiltonian and the Jastrow-Gaussian
/// trial state. Requires min pair separation > 10 h; h is the finite
/// difference step and defaults to 1e-4 times the smallest separation.
double local_energy_calogero(const Calogero1DParams& p, const WavefunctionParams& w,
                             const Configuration& c, Derivative method,
                             std::optional<double> h = std::nullopt);

/// log psi(x + s e_k) - log psi(x), evaluated from the pair terms that involve
/// particle k only, so that small shifts keep full relative precision.
double log_wavefunction_shift(const WavefunctionParams& w, const Configuration& c, int k,
                              double s);

struct ResidualReport {
  double mean = 0.0;
  double stddev = 0.0;
  double max_dev = 0.0;
  double reference = 0.0;
  double rel_error = 0.0;
};

/// Statistics for both derivative modes over the same sampled configurations.
struct ResidualComparison {
  ResidualReport analytic;
  ResidualReport finite_difference;
  // max over samples of |E_fd - E_analytic| / |reference|
  double method_disagreement = 0.0;
  int samples = 0;
};

struct ResidualOptions {
  int samples = 100;
  std::uint64_t seed = 0;
  GaussConvention gauss = GaussConvention::Corrected;
  // Relative finite-difference step (times the smallest pair separation).
  double relative_step = 1e-4;
  int max_retries = 10000;
};

/// Draws configurations uniformly in [-L, L]^N, L = 2 sqrt(N / omega), sorted,
/// rejecting any with a pair closer than 1e-3 L. Deterministic in the seed.
std::vector<Configuration> sample_configurations(const Calogero1DParams& p, int count,
                                                 std::uint64_t seed, int max_retries = 10000);

/// Local-energy statistics against energy_calogero_1d. Sample evaluation runs
/// under OpenMP; the result does not depend on the thread count.
ResidualComparison residual_stats(const Calogero1DParams& p, const ResidualOptions& options);

/// Single-threaded reference for residual_stats.
ResidualComparison residual_stats_serial(const Calogero1DParams& p,
                                         const ResidualOptions& options);

// ---------------------------------------------------------------------------
// Two-body radial problem  -u'' + (g/x^2) u + V(x) u = E u,  u(x_min) = u(x_max) = 0

enum class RadialKind { Oscillator, Coulomb };

struct RadialProblem {
  RadialKind kind = RadialKind::Oscillator;
  double g = 0.0;
  double omega = 1.0;   // Oscillator: V = omega^2 x^2 / 4
  double lambda = 1.0;  // Coulomb:    V = -lambda / x
  double x_min = 0.0;
  double x_max = 12.0;
  int grid_points = 4096;

  static RadialProblem oscillator(double omega, double g);
  static RadialProblem coulomb(double lambda, double g);

  void validate() const;
  double potential(double x) const;
};

struct RadialSolution {
  double energy = 0.0;        // Richardson estimate on the finest grid pair
  double coarse_energy = 0.0; // Richardson estimate one level coarser
  double raw_energy = 0.0;    // unextrapolated finest-grid eigenvalue
};

/// Lowest eigenvalue of the symmetric three-point discretization, found by
/// Sturm-sequence bisection on grids of n, 2n+1 and 4n+3 interior points.
/// Throws ConvergenceError when the two Richardson estimates differ by more
/// than 1e-5 relative.
RadialSolution solve_two_body_radial_detailed(const RadialProblem& problem);

double solve_two_body_radial(const RadialProblem& problem);

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, offdiag)
/// strictly below x.
int sturm_count(std::span<const double> diag, std::span<const double> offdiag, double x);

/// Lowest eigenvalue of a symmetric tridiagonal matrix by bisection.
double lowest_eigenvalue(std::span<const double> diag, std::span<const double> offdiag);

// ---------------------------------------------------------------------------
// Identity probes

/// f(weighted mean) - weighted mean of f, with f(x) = -1/sqrt(x). Convexity of
/// f makes this nonnegative.
double convexity_probe(std::span<const double> points, std::span<const double> weights);

/// |sum_k S_k - (N-2) S| where S sums (x_i - x_j)^2 over all pairs and S_k over
/// the pairs that do not contain particle k.
double subset_identity_check(const Configuration& c);

/// S = sum over pairs of (x_i - x_j)^2.
double pair_square_sum(const Configuration& c);

}  // namespace hallpost::oracle
