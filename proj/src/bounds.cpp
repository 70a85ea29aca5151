#include "hallpost/bounds.hpp"

#include <cmath>
#include <string>

#include "hallpost/couplings.hpp"
#include "hallpost/errors.hpp"
#include "hallpost/models.hpp"

namespace hallpost {

std::string_view to_string(Model model) {
  switch (model) {
    case Model::Calogero1D: return "calogero1d";
    case Model::HyperCoulomb: return "hypercoulomb";
    case Model::CalogeroD: return "calogerod";
  }
  return "unknown";
}

std::optional<Model> parse_model(std::string_view name) {
  if (name == "calogero1d") return Model::Calogero1D;
  if (name == "hypercoulomb") return Model::HyperCoulomb;
  if (name == "calogerod") return Model::CalogeroD;
  return std::nullopt;
}

namespace {

void check_tuple(const CouplingTuple& t) {
  require(std::isfinite(t.mass) && t.mass > 0.0, "coupling tuple: mass must be > 0");
  require(std::isfinite(t.one_body) && std::isfinite(t.two_body) && std::isfinite(t.three_body),
          "coupling tuple: strengths must be finite");
}

void check_particle_count(int n, const CouplingTuple& t, const char* who) {
  require(n >= 3, std::string(who) + ": N must be >= 3, got " + std::to_string(n));
  if (t.three_body != 0.0) {
    require(n >= 4, std::string(who) + ": a three-body coupling needs N >= 4, got " +
                        std::to_string(n));
  }
}

}  // namespace

Rescaling transform_general(int n, const CouplingTuple& t) {
  check_tuple(t);
  check_particle_count(n, t, "transform_general");
  const double nn = n;
  CouplingTuple out = t;
  out.two_body = t.two_body * (nn - 1.0) / (nn - 2.0);
  out.three_body = t.three_body == 0.0 ? 0.0 : t.three_body * (nn - 2.0) / (nn - 3.0);
  return {nn / (nn - 1.0), out};
}

Rescaling transform_ti(int n, const CouplingTuple& t) {
  check_tuple(t);
  require(t.one_body == 0.0, "transform_ti: one-body term breaks translation invariance");
  check_particle_count(n, t, "transform_ti");
  const double nn = n;
  CouplingTuple out = t;
  out.two_body = t.two_body * nn / (nn - 1.0);
  out.three_body = t.three_body == 0.0
                       ? 0.0
                       : t.three_body * nn * (nn - 2.0) / ((nn - 1.0) * (nn - 3.0));
  return {(nn - 1.0) / (nn - 2.0), out};
}

double betaprime_calogero(int n, double beta) {
  require(n >= 3, "betaprime_calogero: N must be >= 3");
  require(std::isfinite(beta) && beta >= 0.5, "betaprime_calogero: beta must be >= 1/2");
  const double s = 2.0 * beta - 1.0;
  const double radicand = n * s * s - 1.0;
  require(radicand >= 0.0,
          "betaprime_calogero: N (2 beta - 1)^2 < 1, rescaled subsystem collapses");
  return 0.5 + std::sqrt(radicand) / (2.0 * std::sqrt(n - 1.0));
}

double betaprime_hyper(int n, double beta) {
  require(n >= 3, "betaprime_hyper: N must be >= 3");
  require(std::isfinite(beta) && beta >= 0.5, "betaprime_hyper: beta must be >= 1/2");
  const double s = 2.0 * beta - 1.0;
  const double radicand = (n - 1.0) * s * s - 1.0;
  require(radicand >= 0.0,
          "betaprime_hyper: (N-1)(2 beta - 1)^2 < 1, rescaled subsystem collapses");
  return 0.5 + std::sqrt(radicand) / (2.0 * std::sqrt(n - 2.0));
}

double betaprime_ddim(int n, int dim, double beta) {
  require(n >= 3, "betaprime_ddim: N must be >= 3");
  require(dim >= 2, "betaprime_ddim: dimension must be >= 2");
  require(std::isfinite(beta) && beta >= 0.0, "betaprime_ddim: beta must be >= 0");
  // -(D-2)/2 + sqrt(N (2b + D - 2)^2 - (D-2)^2) / (2 sqrt(N-1)), rationalized
  // so that small beta at large D does not cancel.
  const double shift = dim - 2.0;
  const double nn = n;
  const double t = 2.0 * beta + shift;
  const double radicand = nn * t * t - shift * shift;
  const double root_nm1 = std::sqrt(nn - 1.0);
  const double denom = root_nm1 * (std::sqrt(radicand) + shift * root_nm1);
  if (denom == 0.0) return 0.0;
  return 2.0 * nn * beta * (beta + shift) / denom;
}

BoundReport make_report(double energy, double ratio, Orientation orientation, double beta,
                        double betaprime) {
  BoundReport r;
  r.energy = energy;
  r.ratio = ratio;
  r.bound = energy / ratio;
  r.orientation = orientation;
  r.satisfied = orientation == Orientation::AtLeastOne ? ratio >= 1.0 : ratio <= 1.0;
  r.margin = r.satisfied ? std::abs(ratio - 1.0) : -std::abs(ratio - 1.0);
  r.beta = beta;
  r.betaprime = betaprime;
  return r;
}

BoundReport hp_report_calogero_1d(int n, double omega, double g) {
  require(n >= 3, "hp_report_calogero_1d: N must be >= 3 (subsystem needs N-1 >= 2)");
  const Calogero1DParams p{n, omega, g};
  const double energy = energy_calogero_1d(p);
  const double beta = p.beta();
  const double bp = betaprime_calogero(n, beta);
  const double nn = n;
  const double ratio = (nn + 1.0 + (beta - 1.0) * nn) / (nn + (bp - 1.0) * (nn - 1.0));
  return make_report(energy, ratio, Orientation::AtLeastOne, beta, bp);
}

BoundReport hp_report_hyper_coulomb(int n, double g, double alpha) {
  require(n >= 4, "hp_report_hyper_coulomb: N must be >= 4 (subsystem needs N-1 >= 3)");
  const HyperCoulombParams p{n, g, alpha};
  const double energy = energy_hyper_coulomb(p);
  const double beta = p.beta();
  const double bp = betaprime_hyper(n, beta);
  const double nn = n;
  const double num = nn - 3.0 + (nn - 1.0) * (nn - 2.0) * bp;
  const double den = nn - 2.0 + nn * (nn - 1.0) * beta;
  const double ratio = (nn * nn * num * num) / ((nn - 1.0) * (nn - 1.0) * den * den);
  return make_report(energy, ratio, Orientation::AtMostOne, beta, bp);
}

BoundReport hp_report_calogero_d(int n, int dim, double omega, double g) {
  require(n >= 4, "hp_report_calogero_d: N must be >= 4 (three-body rescaling)");
  const CalogeroDParams p{n, dim, omega, g};
  const double energy = energy_calogero_d(p);
  const double beta = p.beta();
  const double bp = betaprime_ddim(n, dim, beta);
  const double ratio = (dim + n * beta) / (dim + (n - 1.0) * bp);
  return make_report(energy, ratio, Orientation::AtLeastOne, beta, bp);
}

double check_three_body_rescaling(int n, int dim, double g) {
  require(n >= 4, "check_three_body_rescaling: N must be >= 4");
  const double nn = n;
  const double factor = nn * (nn - 2.0) / ((nn - 1.0) * (nn - 3.0));
  return factor * three_body_from_two_body(g, dim) -
         three_body_from_two_body(nn * g / (nn - 1.0), dim);
}

RatioLimits ratio_limits(Model model, int n, std::optional<int> dim) {
  const double nn = n;
  switch (model) {
    case Model::Calogero1D:
      require(n >= 3, "ratio_limits: Calogero1D needs N >= 3");
      return {(nn + 1.0) / nn, std::sqrt(nn / (nn - 1.0))};
    case Model::HyperCoulomb: {
      require(n >= 4, "ratio_limits: HyperCoulomb needs N >= 4");
      const double num = nn - 3.0 + (nn - 1.0) * (nn - 2.0);
      const double den = nn - 2.0 + nn * (nn - 1.0);
      return {nn * nn * num * num / ((nn - 1.0) * (nn - 1.0) * den * den),
              (nn - 2.0) / (nn - 1.0)};
    }
    case Model::CalogeroD:
      require(n >= 4, "ratio_limits: CalogeroD needs N >= 4");
      require(dim.has_value() && *dim >= 2, "ratio_limits: CalogeroD needs a dimension >= 2");
      return {1.0, std::sqrt(nn / (nn - 1.0))};
  }
  throw DomainError("ratio_limits: unknown model");
}

double rescaled_alpha(int n, double alpha) {
  const double nn = n;
  return alpha * (nn - 1.0) * std::sqrt(nn - 2.0) / std::pow(nn, 1.5);
}

double assembled_ratio_calogero_1d(int n, double omega, double g) {
  const double energy = energy_calogero_1d({n, omega, g});
  // omega^2/4 and g both multiply pair potentials.
  const Rescaling harmonic = transform_ti(n, {1.0, 0.0, omega * omega, 0.0});
  const Rescaling inverse_square = transform_ti(n, {1.0, 0.0, g, 0.0});
  const double sub = energy_calogero_1d(
      {n - 1, std::sqrt(harmonic.couplings.two_body), inverse_square.couplings.two_body});
  return energy / (harmonic.prefactor * sub);
}

double assembled_ratio_hyper_coulomb(int n, double g, double alpha, HyperSubsystem subsystem) {
  require(n >= 4, "assembled_ratio_hyper_coulomb: N must be >= 4");
  const double energy = energy_hyper_coulomb({n, g, alpha});
  const Rescaling ti = transform_ti(n, {1.0, 0.0, g, 0.0});
  const double nn = n;
  const double sub_g = subsystem == HyperSubsystem::TranslationInvariant
                           ? ti.couplings.two_body
                           : g * (nn - 1.0) / (nn - 2.0);
  const double sub = energy_hyper_coulomb({n - 1, sub_g, rescaled_alpha(n, alpha)});
  return energy / (ti.prefactor * sub);
}

double assembled_ratio_calogero_d(int n, int dim, double omega, double g) {
  require(n >= 4, "assembled_ratio_calogero_d: N must be >= 4");
  const double energy = energy_calogero_d({n, dim, omega, g});
  const Rescaling harmonic = transform_ti(n, {1.0, 0.0, omega * omega, 0.0});
  const Rescaling two_body = transform_ti(n, {1.0, 0.0, g, three_body_from_two_body(g, dim)});
  // Chained bound: the subsystem carries G(N g/(N-1)), which lies below the
  // rescaled three-body strength whenever check_three_body_rescaling >= 0.
  const double sub = energy_calogero_d(
      {n - 1, dim, std::sqrt(harmonic.couplings.two_body), two_body.couplings.two_body});
  return energy / (harmonic.prefactor * sub);
}

}  // namespace hallpost
