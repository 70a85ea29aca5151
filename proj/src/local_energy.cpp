#include <cmath>
#include <string>

#include "hallpost/errors.hpp"
#include "hallpost/oracle.hpp"

namespace hallpost::oracle {

namespace {

// Gradient and Laplacian of log psi along coordinate k, in closed form.
struct Derivatives {
  double first;
  double second;
};

Derivatives analytic_derivatives(const WavefunctionParams& w, const Configuration& c, int k) {
  Derivatives d{0.0, 0.0};
  for (int j = 0; j < c.size(); ++j) {
    if (j == k) continue;
    const double r = c[k] - c[j];
    d.first += w.beta / r - 2.0 * w.gauss_coeff * r;
    d.second += -w.beta / (r * r) - 2.0 * w.gauss_coeff;
  }
  return d;
}

Derivatives central_differences(const WavefunctionParams& w, const Configuration& c, int k,
                                double h) {
  const double up = log_wavefunction_shift(w, c, k, h);
  const double down = log_wavefunction_shift(w, c, k, -h);
  return {(up - down) / (2.0 * h), (up + down) / (h * h)};
}

Derivatives richardson_derivatives(const WavefunctionParams& w, const Configuration& c, int k,
                                   double h) {
  const Derivatives coarse = central_differences(w, c, k, h);
  const Derivatives fine = central_differences(w, c, k, 0.5 * h);
  return {(4.0 * fine.first - coarse.first) / 3.0, (4.0 * fine.second - coarse.second) / 3.0};
}

}  // namespace

double log_wavefunction_shift(const WavefunctionParams& w, const Configuration& c, int k,
                              double s) {
  require(k >= 0 && k < c.size(), "log_wavefunction_shift: particle index out of range");
  double jastrow = 0.0;
  double gauss = 0.0;
  for (int j = 0; j < c.size(); ++j) {
    if (j == k) continue;
    const double r = c[k] - c[j];
    require(std::abs(s) < std::abs(r), "log_wavefunction_shift: shift crosses a neighbour");
    jastrow += std::log1p(s / r);
    gauss += s * (2.0 * r + s);
  }
  return w.beta * jastrow - w.gauss_coeff * gauss;
}

double local_energy_calogero(const Calogero1DParams& p, const WavefunctionParams& w,
                             const Configuration& c, Derivative method,
                             std::optional<double> h) {
  p.validate();
  w.validate();
  require(c.size() == p.n, "local_energy_calogero: configuration has " +
                               std::to_string(c.size()) + " coordinates, expected " +
                               std::to_string(p.n));
  const double separation = c.min_separation();
  const double step = h.value_or(1e-4 * separation);
  require(std::isfinite(step) && step > 0.0, "local_energy_calogero: step must be > 0");
  require(separation > 10.0 * step,
          "local_energy_calogero: pair separation must exceed 10 h near the 1/x^2 walls");

  // (Laplacian psi) / psi = Laplacian(log psi) + |grad log psi|^2
  double kinetic = 0.0;
  for (int k = 0; k < c.size(); ++k) {
    const Derivatives d = method == Derivative::Analytic ? analytic_derivatives(w, c, k)
                                                         : richardson_derivatives(w, c, k, step);
    kinetic += d.second + d.first * d.first;
  }
  return -0.5 * kinetic + potential_calogero_1d(p, c);
}

}  // namespace hallpost::oracle
