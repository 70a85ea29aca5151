#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <random>

#include "hallpost/errors.hpp"
#include "hallpost/oracle.hpp"
#include "hallpost/parallel.hpp"

namespace hallpost::oracle {

std::vector<Configuration> sample_configurations(const Calogero1DParams& p, int count,
                                                 std::uint64_t seed, int max_retries) {
  p.validate();
  require(count >= 1, "sample_configurations: count must be >= 1");
  const double box = 2.0 * std::sqrt(static_cast<double>(p.n)) / std::sqrt(p.omega);
  const double floor = 1e-3 * box;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-box, box);
  std::vector<Configuration> configs;
  configs.reserve(static_cast<std::size_t>(count));
  std::vector<double> x(static_cast<std::size_t>(p.n));
  for (int s = 0; s < count; ++s) {
    int attempts = 0;
    for (;;) {
      for (double& v : x) v = uniform(rng);
      std::sort(x.begin(), x.end());
      bool separated = true;
      for (std::size_t i = 1; i < x.size(); ++i) separated = separated && x[i] - x[i - 1] >= floor;
      if (separated) break;
      if (++attempts > max_retries) {
        throw ConvergenceError("sample_configurations: retry cap reached");
      }
    }
    configs.emplace_back(x);
  }
  return configs;
}

namespace {

struct SampleEnergies {
  std::vector<double> analytic;
  std::vector<double> finite_difference;
};

void evaluate_sample(const Calogero1DParams& p, const WavefunctionParams& w,
                     const Configuration& c, double relative_step, double& analytic,
                     double& finite_difference) {
  analytic = local_energy_calogero(p, w, c, Derivative::Analytic);
  finite_difference = local_energy_calogero(p, w, c, Derivative::FiniteDifference,
                                            relative_step * c.min_separation());
}

ResidualReport summarize(const std::vector<double>& values, double reference) {
  ResidualReport r;
  r.reference = reference;
  double sum = 0.0;
  for (double v : values) sum += v;
  r.mean = sum / static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) {
    var += (v - r.mean) * (v - r.mean);
    r.max_dev = std::max(r.max_dev, std::abs(v - r.mean));
  }
  r.stddev = std::sqrt(var / static_cast<double>(values.size()));
  r.rel_error = std::abs(r.mean - reference) / std::abs(reference);
  return r;
}

ResidualComparison compare(const SampleEnergies& e, double reference) {
  ResidualComparison out;
  out.samples = static_cast<int>(e.analytic.size());
  out.analytic = summarize(e.analytic, reference);
  out.finite_difference = summarize(e.finite_difference, reference);
  for (std::size_t i = 0; i < e.analytic.size(); ++i) {
    out.method_disagreement =
        std::max(out.method_disagreement,
                 std::abs(e.finite_difference[i] - e.analytic[i]) / std::abs(reference));
  }
  return out;
}

void check_options(const ResidualOptions& options) {
  require(options.samples >= 10, "residual_stats: need at least 10 samples");
  require(options.relative_step > 0.0 && options.relative_step < 0.1,
          "residual_stats: relative step must lie in (0, 0.1)");
}

}  // namespace

ResidualComparison residual_stats_serial(const Calogero1DParams& p,
                                         const ResidualOptions& options) {
  check_options(options);
  const WavefunctionParams w = WavefunctionParams::for_model(p, options.gauss);
  const auto configs = sample_configurations(p, options.samples, options.seed, options.max_retries);
  SampleEnergies e{std::vector<double>(configs.size()), std::vector<double>(configs.size())};
  for (std::size_t i = 0; i < configs.size(); ++i) {
    evaluate_sample(p, w, configs[i], options.relative_step, e.analytic[i],
                    e.finite_difference[i]);
  }
  return compare(e, energy_calogero_1d(p));
}

ResidualComparison residual_stats(const Calogero1DParams& p, const ResidualOptions& options) {
  check_options(options);
  const WavefunctionParams w = WavefunctionParams::for_model(p, options.gauss);
  const auto configs = sample_configurations(p, options.samples, options.seed, options.max_retries);
  SampleEnergies e{std::vector<double>(configs.size()), std::vector<double>(configs.size())};
  const auto count = static_cast<std::ptrdiff_t>(configs.size());
  [[maybe_unused]] const int threads = thread_cap();
  // Exceptions may not cross the parallel region; keep the first and rethrow.
  std::exception_ptr failure;
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      evaluate_sample(p, w, configs[k], options.relative_step, e.analytic[k],
                      e.finite_difference[k]);
    } catch (...) {
#pragma omp critical(hallpost_residual_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return compare(e, energy_calogero_1d(p));
}

}  // namespace hallpost::oracle
