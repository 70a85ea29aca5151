#include <doctest.h>

#include <cmath>
#include <random>

#include "hallpost/bounds.hpp"
#include "hallpost/couplings.hpp"
#include "hallpost/errors.hpp"
#include "hallpost/models.hpp"
#include "test_support.hpp"

using namespace hallpost;
using hallpost::testing::close_rel;

TEST_CASE("transform_general") {
  const Rescaling r = transform_general(5, {1.0, 1.0, 1.0, 0.0});
  CHECK(r.prefactor == doctest::Approx(5.0 / 4.0));
  CHECK(r.couplings.mass == 1.0);
  CHECK(r.couplings.one_body == 1.0);
  CHECK(r.couplings.two_body == doctest::Approx(4.0 / 3.0));
  CHECK(r.couplings.three_body == 0.0);

  const Rescaling s = transform_general(4, {1.0, 0.0, 0.0, 1.0});
  CHECK(s.prefactor == doctest::Approx(4.0 / 3.0));
  CHECK(s.couplings.three_body == doctest::Approx(2.0));

  CHECK_THROWS_AS(transform_general(3, {1.0, 0.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(transform_general(2, {1.0, 0.0, 1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(transform_general(5, {0.0, 0.0, 1.0, 0.0}), DomainError);
}

TEST_CASE("transform_ti") {
  const double g = 0.7;
  const Rescaling r = transform_ti(5, {1.0, 0.0, g, 0.0});
  CHECK(r.prefactor == doctest::Approx(4.0 / 3.0));
  CHECK(r.couplings.two_body == doctest::Approx(5.0 * g / 4.0));

  const Rescaling s = transform_ti(5, {1.0, 0.0, 0.0, g});
  CHECK(s.prefactor == doctest::Approx(4.0 / 3.0));
  CHECK(s.couplings.three_body == doctest::Approx(15.0 * g / 8.0));

  const Rescaling t = transform_ti(3, {1.0, 0.0, 1.0, 0.0});
  CHECK(t.prefactor == doctest::Approx(2.0));
  CHECK(t.couplings.two_body == doctest::Approx(1.5));

  CHECK_THROWS_AS(transform_ti(5, {1.0, 0.1, 1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(transform_ti(3, {1.0, 0.0, 1.0, 1.0}), DomainError);

  // omega^2 is a pair strength: the oscillator frequency scales by sqrt(N/(N-1)).
  const Rescaling w = transform_ti(5, {1.0, 0.0, 4.0, 0.0});
  CHECK(std::sqrt(w.couplings.two_body) == doctest::Approx(2.0 * std::sqrt(5.0 / 4.0)));
}

TEST_CASE("betaprime_calogero") {
  CHECK(betaprime_calogero(5, 1.0) == 1.0);
  const double bp = betaprime_calogero(5, 2.0);
  CHECK(bp == doctest::Approx(0.5 + std::sqrt(44.0) / 4.0).epsilon(1e-15));
  CHECK(bp == doctest::Approx(2.158312).epsilon(1e-6));
  CHECK(bp * (bp - 1.0) == doctest::Approx(5.0 * 2.0 / 4.0).epsilon(1e-14));
  CHECK_THROWS_AS(betaprime_calogero(5, 0.5), DomainError);
  CHECK_THROWS_AS(betaprime_calogero(2, 1.0), DomainError);
}

TEST_CASE("betaprime_hyper follows the printed (N-1) form") {
  CHECK(betaprime_hyper(5, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(betaprime_hyper(4, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  const double bp = betaprime_hyper(5, 2.0);
  CHECK(bp == doctest::Approx(0.5 + std::sqrt(35.0) / (2.0 * std::sqrt(3.0))).epsilon(1e-15));
  CHECK(bp == doctest::Approx(2.207825).epsilon(1e-6));
  // The subsystem coupling behind this exponent is (N-1) g / (N-2) = 8/3.
  CHECK(bp * (bp - 1.0) == doctest::Approx(4.0 * 2.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(betaprime_hyper(5, 0.5), DomainError);
}

TEST_CASE("betaprime_ddim") {
  for (int n : {3, 5, 11}) {
    for (int dim : {2, 3, 9}) CHECK(betaprime_ddim(n, dim, 0.0) == 0.0);
  }
  const double bp = betaprime_ddim(5, 3, 1.0);
  CHECK(bp == doctest::Approx(-0.5 + std::sqrt(44.0) / 4.0).epsilon(1e-14));
  CHECK(bp * bp + bp == doctest::Approx(5.0 * 2.0 / 4.0).epsilon(1e-14));
  CHECK(betaprime_ddim(5, 2, 2.0) == doctest::Approx(std::sqrt(5.0 / 4.0) * 2.0).epsilon(1e-15));
  CHECK_THROWS_AS(betaprime_ddim(5, 1, 1.0), DomainError);
  CHECK_THROWS_AS(betaprime_ddim(5, 3, -0.1), DomainError);
}

TEST_CASE("exponent maps agree with the coupling rescaling") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> b1(0.5, 40.0), b0(0.0, 40.0);
  std::uniform_int_distribution<int> nd(4, 60), dd(2, 10);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const int n = nd(rng);
    const double beta = b1(rng);
    const double g = g_from_beta(beta);
    if (n * (2 * beta - 1) * (2 * beta - 1) >= 1.0) {
      CHECK(close_rel(betaprime_calogero(n, beta), beta_from_g(n * g / (n - 1.0)), 1e-12));
      CHECK(close_rel(betaprime_hyper(n, beta), betaprime_calogero(n - 1, beta), 1e-12));
      CHECK(close_rel(betaprime_hyper(n, beta), beta_from_g((n - 1.0) * g / (n - 2.0)), 1e-12));
      ++checked;
    }
    const int dim = dd(rng);
    const double b = b0(rng);
    const double gd = g_from_beta_ddim(b, dim);
    const double expected = beta_from_g_ddim(n * gd / (n - 1.0), dim);
    CHECK(std::abs(betaprime_ddim(n, dim, b) - expected) <= 1e-12 * std::max(1.0, expected));
  }
  CHECK(checked > 250);
}

TEST_CASE("hp_report_calogero_1d") {
  const BoundReport r0 = hp_report_calogero_1d(5, 1.0, 0.0);
  CHECK(r0.ratio == doctest::Approx(6.0 / 5.0).epsilon(1e-14));
  CHECK(r0.orientation == Orientation::AtLeastOne);
  CHECK(r0.satisfied);

  const BoundReport rinf = hp_report_calogero_1d(5, 1.0, 1e8);
  CHECK(std::abs(rinf.ratio - std::sqrt(5.0 / 4.0)) < 1e-3);

  const BoundReport r2 = hp_report_calogero_1d(5, 1.0, 2.0);
  CHECK(r2.ratio == doctest::Approx(11.0 / (5.0 + 4.0 * (r2.betaprime - 1.0))).epsilon(1e-15));
  CHECK(r2.ratio == doctest::Approx(1.141879).epsilon(1e-6));
  // Independent assembly: E_5 against (4/3) E_4 at omega sqrt(5/4), g 5/4.
  const double e5 = energy_calogero_1d({5, 1.0, 2.0});
  const double e4 = energy_calogero_1d({4, std::sqrt(5.0 / 4.0), 2.5});
  CHECK(close_rel(r2.ratio, e5 / (4.0 / 3.0 * e4), 1e-13));
  CHECK(close_rel(r2.bound, 4.0 / 3.0 * e4, 1e-13));

  CHECK_THROWS_AS(hp_report_calogero_1d(2, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(hp_report_calogero_1d(5, 1.0, -0.25), DomainError);
}

TEST_CASE("hp_report_hyper_coulomb") {
  const BoundReport r0 = hp_report_hyper_coulomb(5, 0.0, 1.0);
  CHECK(r0.ratio == doctest::Approx(4900.0 / 8464.0).epsilon(1e-14));
  CHECK(r0.ratio == doctest::Approx(0.578923).epsilon(1e-6));
  CHECK(r0.orientation == Orientation::AtMostOne);
  CHECK(r0.satisfied);
  // Independent assembly from the energy formula: E_5 and (4/3) E_4(alpha').
  const double alpha_p = 4.0 * std::sqrt(3.0) / std::pow(5.0, 1.5);
  const double e5 = energy_hyper_coulomb({5, 0.0, 1.0});
  const double e4 = energy_hyper_coulomb({4, 0.0, alpha_p});
  CHECK(close_rel(r0.ratio, e5 / (4.0 / 3.0 * e4), 1e-13));

  const BoundReport rinf = hp_report_hyper_coulomb(5, 1e8, 1.0);
  CHECK(std::abs(rinf.ratio - 0.75) < 1e-3);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> g(0.0, 1e3);
  std::uniform_int_distribution<int> n(4, 50);
  for (int i = 0; i < 200; ++i) CHECK(hp_report_hyper_coulomb(n(rng), g(rng), 1.0).ratio <= 1.0);

  CHECK_THROWS_AS(hp_report_hyper_coulomb(3, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(hp_report_hyper_coulomb(5, 0.0, 0.0), DomainError);
}

TEST_CASE("hyper-Coulomb with the translation-invariant subsystem coupling") {
  // N g/(N-1) instead of (N-1) g/(N-2): still a valid bound, but not the
  // closed-form expression once g > 0.
  const double n = 5.0;
  CHECK(close_rel(assembled_ratio_hyper_coulomb(5, 0.0, 1.0, HyperSubsystem::TranslationInvariant),
                  hp_report_hyper_coulomb(5, 0.0, 1.0).ratio, 1e-13));
  const double r2 = assembled_ratio_hyper_coulomb(5, 2.0, 1.0, HyperSubsystem::TranslationInvariant);
  CHECK(r2 <= 1.0);
  CHECK(std::abs(r2 - hp_report_hyper_coulomb(5, 2.0, 1.0).ratio) > 1e-3);
  const double rinf =
      assembled_ratio_hyper_coulomb(5, 1e8, 1.0, HyperSubsystem::TranslationInvariant);
  CHECK(std::abs(rinf - n * (n - 2.0) * (n - 2.0) / ((n - 1.0) * (n - 1.0) * (n - 1.0))) < 1e-3);
}

TEST_CASE("hp_report_calogero_d") {
  for (int n = 4; n <= 10; ++n) {
    for (int dim = 2; dim <= 6; ++dim) {
      CHECK(hp_report_calogero_d(n, dim, 1.0, 0.0).ratio == 1.0);
    }
  }
  CHECK(std::abs(hp_report_calogero_d(5, 3, 1.0, 1e8).ratio - std::sqrt(5.0 / 4.0)) < 1e-3);
  CHECK(std::abs(hp_report_calogero_d(5, 10000, 1.0, 1.0).ratio - 1.0) < 1e-3);
  CHECK(hp_report_calogero_d(5, 10000, 1.0, 1.0).ratio > 1.0);
  CHECK_THROWS_AS(hp_report_calogero_d(3, 3, 1.0, 1.0), DomainError);
}

TEST_CASE("check_three_body_rescaling") {
  const double m = check_three_body_rescaling(5, 3, 2.0);
  const double g25 = hallpost::testing::oracle_beta_ddim(2.5, 3);
  CHECK(m == doctest::Approx(15.0 / 8.0 - g25 * g25).epsilon(1e-12));
  CHECK(m == doctest::Approx(0.533312).epsilon(1e-6));
  CHECK(check_three_body_rescaling(7, 4, 0.0) == 0.0);
  CHECK(check_three_body_rescaling(4, 2, 1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(check_three_body_rescaling(3, 3, 1.0), DomainError);
}

TEST_CASE("ratio_limits") {
  const RatioLimits c = ratio_limits(Model::Calogero1D, 5);
  CHECK(c.at_zero == doctest::Approx(1.2));
  CHECK(c.at_infinity == doctest::Approx(1.118034).epsilon(1e-6));
  const RatioLimits d = ratio_limits(Model::CalogeroD, 5, 3);
  CHECK(d.at_zero == 1.0);
  CHECK(d.at_infinity == doctest::Approx(1.118034).epsilon(1e-6));
  const RatioLimits h = ratio_limits(Model::HyperCoulomb, 5);
  CHECK(h.at_zero == doctest::Approx(0.578923).epsilon(1e-6));
  CHECK(h.at_infinity == 0.75);
  CHECK_THROWS_AS(ratio_limits(Model::CalogeroD, 5), DomainError);
  CHECK_THROWS_AS(ratio_limits(Model::HyperCoulomb, 3), DomainError);
}

TEST_CASE("limits are attained numerically") {
  const struct {
    Model model;
    std::function<double(double)> ratio;
  } cases[] = {
      {Model::Calogero1D, [](double g) { return hp_report_calogero_1d(5, 1.0, g).ratio; }},
      {Model::HyperCoulomb, [](double g) { return hp_report_hyper_coulomb(5, g, 1.0).ratio; }},
      {Model::CalogeroD, [](double g) { return hp_report_calogero_d(5, 3, 1.0, g).ratio; }},
  };
  for (const auto& c : cases) {
    const RatioLimits lim = ratio_limits(c.model, 5, 3);
    CAPTURE(to_string(c.model));
    CHECK(std::abs(c.ratio(1e8) - lim.at_infinity) < 1e-3);
    CHECK(std::abs(c.ratio(1e-12) - lim.at_zero) < 1e-6);
  }
}

TEST_CASE("large-N flattening of the one-dimensional ratio") {
  const double r10 = hp_report_calogero_1d(10, 1.0, 1.0).ratio - 1.0;
  const double r100 = hp_report_calogero_1d(100, 1.0, 1.0).ratio - 1.0;
  const double r1000 = hp_report_calogero_1d(1000, 1.0, 1.0).ratio - 1.0;
  CHECK(r10 > r100);
  CHECK(r100 > r1000);
  CHECK(r1000 > 0.0);
  CHECK(r1000 < 1e-2);
}

TEST_CASE("ratios do not depend on omega or alpha") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> g(0.0, 30.0);
  std::uniform_int_distribution<int> n(4, 20), d(2, 6);
  for (int i = 0; i < 50; ++i) {
    const int nn = n(rng);
    const int dim = d(rng);
    const double gg = g(rng);
    for (double c : {0.1, 10.0}) {
      CHECK(hp_report_calogero_1d(nn, c, gg).ratio == hp_report_calogero_1d(nn, 1.0, gg).ratio);
      CHECK(hp_report_calogero_d(nn, dim, c, gg).ratio ==
            hp_report_calogero_d(nn, dim, 1.0, gg).ratio);
      CHECK(hp_report_hyper_coulomb(nn, gg, c).ratio == hp_report_hyper_coulomb(nn, gg, 1.0).ratio);
      // The assembled route only sees the energy prefactor through a ratio.
      CHECK(close_rel(assembled_ratio_hyper_coulomb(nn, gg, c),
                      assembled_ratio_hyper_coulomb(nn, gg, 1.0), 1e-13));
    }
  }
}

TEST_CASE("assembled ratios equal the closed forms") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> g(0.0, 100.0), w(0.2, 5.0);
  std::uniform_int_distribution<int> n(4, 40), d(2, 8);
  for (int i = 0; i < 200; ++i) {
    const int nn = n(rng);
    const int dim = d(rng);
    const double gg = g(rng);
    const double omega = w(rng);
    CHECK(close_rel(assembled_ratio_calogero_1d(nn, omega, gg),
                    hp_report_calogero_1d(nn, omega, gg).ratio, 1e-12));
    CHECK(close_rel(assembled_ratio_hyper_coulomb(nn, gg, omega),
                    hp_report_hyper_coulomb(nn, gg, omega).ratio, 1e-12));
    CHECK(close_rel(assembled_ratio_calogero_d(nn, dim, omega, gg),
                    hp_report_calogero_d(nn, dim, omega, gg).ratio, 1e-12));
  }
}

TEST_CASE("BoundReport satisfaction and margin") {
  const BoundReport a = make_report(2.0, 1.25, Orientation::AtLeastOne, 1.0, 1.0);
  CHECK(a.satisfied);
  CHECK(a.margin == doctest::Approx(0.25));
  CHECK(a.bound == doctest::Approx(1.6));
  const BoundReport b = make_report(2.0, 0.8, Orientation::AtLeastOne, 1.0, 1.0);
  CHECK_FALSE(b.satisfied);
  CHECK(b.margin == doctest::Approx(-0.2));
  const BoundReport c = make_report(-2.0, 0.8, Orientation::AtMostOne, 1.0, 1.0);
  CHECK(c.satisfied);
  CHECK(c.margin == doctest::Approx(0.2));
  const BoundReport e = make_report(-2.0, 1.1, Orientation::AtMostOne, 1.0, 1.0);
  CHECK_FALSE(e.satisfied);
  CHECK(e.margin < 0.0);
}

TEST_CASE("model names") {
  for (Model m : {Model::Calogero1D, Model::HyperCoulomb, Model::CalogeroD}) {
    CHECK(parse_model(to_string(m)) == m);
  }
  CHECK_FALSE(parse_model("sutherland").has_value());
}
