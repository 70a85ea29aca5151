#pragma once

#include <optional>
#include <string_view>

namespace hallpost {

enum class Model { Calogero1D, HyperCoulomb, CalogeroD };

std::string_view to_string(Model model);
std::optional<Model> parse_model(std::string_view name);

/// Mass and one-, two-, three-body strengths of a generic N-body Hamiltonian.
struct CouplingTuple {
  double mass = 1.0;
  double one_body = 0.0;
  double two_body = 0.0;
  double three_body = 0.0;
};

/// E_N(t) >= prefactor * E_{N-1}(couplings).
struct Rescaling {
  double prefactor;
  CouplingTuple couplings;
};

/// General Hall-Post rescaling (one-body confinement allowed).
Rescaling transform_general(int n, const CouplingTuple& t);

/// Improved rescaling for translation-invariant Hamiltonians (one_body == 0).
Rescaling transform_ti(int n, const CouplingTuple& t);

// Jastrow exponent of the (N-1)-body subsystem entering each closed-form ratio.
double betaprime_calogero(int n, double beta);
double betaprime_hyper(int n, double beta);
double betaprime_ddim(int n, int dim, double beta);

enum class Orientation {
  AtLeastOne,  // positive energies: satisfied when ratio >= 1
  AtMostOne,   // binding energies: satisfied when ratio <= 1
};

struct BoundReport {
  double energy = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  Orientation orientation = Orientation::AtLeastOne;
  double margin = 0.0;
  bool satisfied = false;
  // Jastrow exponents of the N-body system and of the rescaled subsystem.
  double beta = 0.0;
  double betaprime = 0.0;
};

BoundReport make_report(double energy, double ratio, Orientation orientation, double beta,
                        double betaprime);

BoundReport hp_report_calogero_1d(int n, double omega, double g);
BoundReport hp_report_hyper_coulomb(int n, double g, double alpha);
BoundReport hp_report_calogero_d(int n, int dim, double omega, double g);

/// N(N-2)/((N-1)(N-3)) G(g) - G(N g/(N-1)); nonnegative when the chained
/// D-dimensional bound is valid.
double check_three_body_rescaling(int n, int dim, double g);

struct RatioLimits {
  double at_zero;
  double at_infinity;
};

RatioLimits ratio_limits(Model model, int n, std::optional<int> dim = std::nullopt);

/// Which subsystem two-body coupling the hyper-Coulomb assembly uses.
///   MatchingBetaPrime: (N-1) g / (N-2), the coupling whose exponent is
///     betaprime_hyper; reproduces the closed-form ratio exactly.
///   TranslationInvariant: N g / (N-1), the transform_ti rescaling.
enum class HyperSubsystem { MatchingBetaPrime, TranslationInvariant };

// Ratios built from the model energies: E_N / (prefactor * E_{N-1}(rescaled)).
// These are the independent route to the closed-form ratio expressions.
double assembled_ratio_calogero_1d(int n, double omega, double g);
double assembled_ratio_hyper_coulomb(int n, double g, double alpha,
                                     HyperSubsystem subsystem = HyperSubsystem::MatchingBetaPrime);
double assembled_ratio_calogero_d(int n, int dim, double omega, double g);

/// Subsystem Coulomb strength alpha' obtained from the convexity argument.
double rescaled_alpha(int n, double alpha);

}  // namespace hallpost
