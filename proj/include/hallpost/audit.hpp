#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallpost/bounds.hpp"

namespace hallpost {

/// Cartesian grid of parameter points for one model.
struct AuditSpec {
  Model model = Model::Calogero1D;
  int n_min = 3;
  int n_max = 10;
  // Only read for CalogeroD.
  int dim_min = 2;
  int dim_max = 6;
  std::vector<double> g_grid;
  double omega = 1.0;
  double alpha = 1.0;
};

struct AuditRow {
  int n = 0;
  std::optional<int> dim;
  double g = 0.0;
  std::optional<BoundReport> report;
  // CalogeroD only: N(N-2)/((N-1)(N-3)) G(g) - G(N g/(N-1)).
  std::optional<double> three_body_margin;
  // -1/4 <= g < 0: admissible but outside the range the figures cover.
  bool subcritical = false;
  std::string error;

  bool violation() const;
};

struct AuditResult {
  std::vector<AuditRow> rows;
  int violation_count = 0;
  int error_count = 0;
  double worst_margin = 0.0;
  std::optional<double> min_three_body_margin;
};

/// {0, 0.25, ..., 5} followed by {10, 100, 1000, 10000}.
std::vector<double> default_g_grid();

AuditSpec default_audit_spec(Model model);

/// Throws DomainError when a range leaves the model's validity domain.
void validate(const AuditSpec& spec);

/// Evaluates every grid point; rows come back ordered by (N, D, g) whatever
/// the thread count. Per-point domain errors land in AuditRow::error.
AuditResult audit_grid(const AuditSpec& spec);

/// Single-threaded reference for audit_grid.
AuditResult audit_grid_serial(const AuditSpec& spec);

}  // namespace hallpost
