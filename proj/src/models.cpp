#include "hallpost/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hallpost/couplings.hpp"
#include "hallpost/errors.hpp"

namespace hallpost {

void Calogero1DParams::validate() const {
  require(n >= 2, "Calogero1D: N must be >= 2, got " + std::to_string(n));
  require(std::isfinite(omega) && omega > 0.0, "Calogero1D: omega must be > 0");
  require(std::isfinite(g) && g >= kCollapseCoupling, "Calogero1D: g must be >= -1/4");
}

double Calogero1DParams::beta() const { return beta_from_g(g); }

void HyperCoulombParams::validate() const {
  require(n >= 3, "HyperCoulomb: N must be >= 3, got " + std::to_string(n));
  require(std::isfinite(alpha) && alpha > 0.0, "HyperCoulomb: alpha must be > 0");
  require(std::isfinite(g) && g >= kCollapseCoupling, "HyperCoulomb: g must be >= -1/4");
}

double HyperCoulombParams::beta() const { return beta_from_g(g); }

void CalogeroDParams::validate() const {
  require(n >= 2, "CalogeroD: N must be >= 2, got " + std::to_string(n));
  require(dim >= 2, "CalogeroD: dimension must be >= 2, got " + std::to_string(dim));
  require(std::isfinite(omega) && omega > 0.0, "CalogeroD: omega must be > 0");
  require(std::isfinite(g) && g >= 0.0, "CalogeroD: g must be >= 0");
}

double CalogeroDParams::beta() const { return beta_from_g_ddim(g, dim); }

double CalogeroDParams::three_body() const { return three_body_from_two_body(g, dim); }

Configuration::Configuration(std::vector<double> x) : x_(std::move(x)) {
  require(!x_.empty(), "Configuration: no coordinates");
  for (double v : x_) require(std::isfinite(v), "Configuration: non-finite coordinate");
  for (std::size_t i = 1; i < x_.size(); ++i) {
    require(x_[i - 1] < x_[i], "Configuration: coordinates must be strictly increasing");
  }
}

double Configuration::min_separation() const {
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < x_.size(); ++i) sep = std::min(sep, x_[i] - x_[i - 1]);
  return sep;
}

double gauss_coeff(const Calogero1DParams& p, GaussConvention convention) {
  const double base = p.omega / std::sqrt(2.0 * p.n);
  return convention == GaussConvention::Corrected ? 0.5 * base : base;
}

WavefunctionParams WavefunctionParams::for_model(const Calogero1DParams& p,
                                                 GaussConvention convention) {
  p.validate();
  return {p.beta(), hallpost::gauss_coeff(p, convention)};
}

void WavefunctionParams::validate() const {
  require(std::isfinite(beta), "Wavefunction: beta must be finite");
  require(std::isfinite(gauss_coeff) && gauss_coeff > 0.0,
          "Wavefunction: Gaussian coefficient must be > 0");
}

double energy_calogero_1d(const Calogero1DParams& p) {
  p.validate();
  const double n = p.n;
  const double beta = p.beta();
  return std::sqrt(n / 8.0) * (n * n - 1.0 + (beta - 1.0) * n * (n - 1.0)) * p.omega;
}

double energy_hyper_coulomb(const HyperCoulombParams& p) {
  p.validate();
  const double n = p.n;
  const double beta = p.beta();
  const double bracket = n - 2.0 + n * (n - 1.0) * beta;
  return -(p.alpha * p.alpha) / (n * bracket * bracket);
}

double energy_calogero_d(const CalogeroDParams& p) {
  p.validate();
  const double n = p.n;
  const double beta = p.beta();
  return std::sqrt(n / 8.0) * (p.dim * (n - 1.0) + n * (n - 1.0) * beta) * p.omega;
}

double log_wavefunction_calogero(const Calogero1DParams& p, const WavefunctionParams& w,
                                 const Configuration& c, double separation_floor) {
  p.validate();
  w.validate();
  require(c.size() == p.n, "log_wavefunction: configuration has " + std::to_string(c.size()) +
                               " coordinates, expected " + std::to_string(p.n));
  require(c.min_separation() > separation_floor,
          "log_wavefunction: pair separation below floor");
  double log_jastrow = 0.0;
  double square_sum = 0.0;
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) {
      const double d = c[j] - c[i];
      log_jastrow += std::log(d);
      square_sum += d * d;
    }
  }
  return w.beta * log_jastrow - w.gauss_coeff * square_sum;
}

double potential_calogero_1d(const Calogero1DParams& p, const Configuration& c) {
  const double harmonic = 0.25 * p.omega * p.omega;
  double v = 0.0;
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) {
      const double d2 = (c[j] - c[i]) * (c[j] - c[i]);
      v += harmonic * d2 + p.g / d2;
    }
  }
  return v;
}

}  // namespace hallpost
