#pragma once

#include <span>
#include <vector>

namespace hallpost {

/// Calogero model on a line: N particles with pairwise omega^2/4 x^2 + g/x^2
/// (hbar = m = 1).
struct Calogero1DParams {
  int n = 2;
  double omega = 1.0;
  double g = 0.0;

  void validate() const;
  double beta() const;
};

/// Pairwise g/x^2 plus a hypercentral Coulomb term -alpha^2 / r_hyper.
struct HyperCoulombParams {
  int n = 3;
  double g = 0.0;
  double alpha = 1.0;

  void validate() const;
  double beta() const;
};

/// D-dimensional Calogero-type model with the three-body coupling G(g).
struct CalogeroDParams {
  int n = 2;
  int dim = 2;
  double omega = 1.0;
  double g = 0.0;

  void validate() const;
  double beta() const;
  double three_body() const;
};

/// Ordered particle coordinates x_1 < x_2 < ... < x_N.
class Configuration {
public:
  explicit Configuration(std::vector<double> x);

  std::span<const double> coords() const { return x_; }
  int size() const { return static_cast<int>(x_.size()); }
  double operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
  double min_separation() const;

private:
  std::vector<double> x_;
};

/// Which Gaussian coefficient to use in the Calogero ground state.
///   Corrected: a = omega / (2 sqrt(2N)), the value that makes H psi = E psi.
///   AsPrinted: a = omega / sqrt(2N), kept to show the mismatch.
enum class GaussConvention { Corrected, AsPrinted };

double gauss_coeff(const Calogero1DParams& p, GaussConvention convention = GaussConvention::Corrected);

struct WavefunctionParams {
  double beta = 1.0;
  double gauss_coeff = 0.25;

  static WavefunctionParams for_model(const Calogero1DParams& p,
                                      GaussConvention convention = GaussConvention::Corrected);
  void validate() const;
};

double energy_calogero_1d(const Calogero1DParams& p);
double energy_hyper_coulomb(const HyperCoulombParams& p);
double energy_calogero_d(const CalogeroDParams& p);

inline constexpr double kDefaultSeparationFloor = 1e-10;

/// log psi on the ordered sector:
///   beta * sum_{i<j} ln(x_j - x_i) - a * sum_{i<j} (x_i - x_j)^2
double log_wavefunction_calogero(const Calogero1DParams& p, const WavefunctionParams& w,
                                 const Configuration& c,
                                 double separation_floor = kDefaultSeparationFloor);

/// Sum over pairs of the Calogero potential omega^2/4 x_ij^2 + g / x_ij^2.
double potential_calogero_1d(const Calogero1DParams& p, const Configuration& c);

}  // namespace hallpost
