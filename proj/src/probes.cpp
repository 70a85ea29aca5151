#include <cmath>

#include "hallpost/errors.hpp"
#include "hallpost/oracle.hpp"

namespace hallpost::oracle {

double convexity_probe(std::span<const double> points, std::span<const double> weights) {
  require(!points.empty(), "convexity_probe: no points");
  require(points.size() == weights.size(), "convexity_probe: points and weights differ in size");
  double total = 0.0;
  double mean = 0.0;
  double mean_f = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    require(std::isfinite(points[i]) && points[i] > 0.0, "convexity_probe: points must be > 0");
    require(std::isfinite(weights[i]) && weights[i] > 0.0,
            "convexity_probe: weights must be > 0");
    total += weights[i];
    mean += weights[i] * points[i];
    mean_f += weights[i] * (-1.0 / std::sqrt(points[i]));
  }
  mean /= total;
  mean_f /= total;
  return -1.0 / std::sqrt(mean) - mean_f;
}

double pair_square_sum(const Configuration& c) {
  double s = 0.0;
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) s += (c[i] - c[j]) * (c[i] - c[j]);
  }
  return s;
}

double subset_identity_check(const Configuration& c) {
  require(c.size() >= 3, "subset_identity_check: need N >= 3");
  const double full = pair_square_sum(c);
  double subsets = 0.0;
  for (int k = 0; k < c.size(); ++k) {
    for (int i = 0; i < c.size(); ++i) {
      if (i == k) continue;
      for (int j = i + 1; j < c.size(); ++j) {
        if (j == k) continue;
        subsets += (c[i] - c[j]) * (c[i] - c[j]);
      }
    }
  }
  return std::abs(subsets - (c.size() - 2.0) * full);
}

}  // namespace hallpost::oracle
