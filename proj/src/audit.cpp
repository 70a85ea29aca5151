#include "hallpost/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "hallpost/couplings.hpp"
#include "hallpost/errors.hpp"
#include "hallpost/parallel.hpp"

namespace hallpost {

bool AuditRow::violation() const {
  if (report && !report->satisfied) return true;
  return three_body_margin && *three_body_margin < 0.0;
}

std::vector<double> default_g_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(0.25 * i);
  for (double g : {10.0, 100.0, 1000.0, 10000.0}) grid.push_back(g);
  return grid;
}

AuditSpec default_audit_spec(Model model) {
  AuditSpec spec;
  spec.model = model;
  spec.n_min = model == Model::Calogero1D ? 3 : 4;
  spec.n_max = 10;
  spec.g_grid = default_g_grid();
  return spec;
}

void validate(const AuditSpec& spec) {
  const int n_floor = spec.model == Model::Calogero1D ? 3 : 4;
  require(spec.n_min >= n_floor, "audit: " + std::string(to_string(spec.model)) +
                                     " needs N >= " + std::to_string(n_floor));
  require(spec.n_max >= spec.n_min, "audit: empty N range");
  if (spec.model == Model::CalogeroD) {
    require(spec.dim_min >= 2, "audit: dimension must be >= 2");
    require(spec.dim_max >= spec.dim_min, "audit: empty dimension range");
  }
  require(!spec.g_grid.empty(), "audit: empty coupling grid");
  const double g_floor = spec.model == Model::CalogeroD ? 0.0 : kCollapseCoupling;
  for (double g : spec.g_grid) {
    require(std::isfinite(g) && g >= g_floor, "audit: coupling " + std::to_string(g) +
                                                  " outside the model domain");
  }
  require(std::isfinite(spec.omega) && spec.omega > 0.0, "audit: omega must be > 0");
  require(std::isfinite(spec.alpha) && spec.alpha > 0.0, "audit: alpha must be > 0");
}

namespace {

std::vector<AuditRow> enumerate_points(const AuditSpec& spec) {
  std::vector<double> grid = spec.g_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const bool has_dim = spec.model == Model::CalogeroD;
  const int dim_lo = has_dim ? spec.dim_min : 0;
  const int dim_hi = has_dim ? spec.dim_max : 0;

  std::vector<AuditRow> rows;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    for (int dim = dim_lo; dim <= dim_hi; ++dim) {
      for (double g : grid) {
        AuditRow row;
        row.n = n;
        if (has_dim) row.dim = dim;
        row.g = g;
        row.subcritical = g < 0.0;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void evaluate(const AuditSpec& spec, AuditRow& row) {
  try {
    switch (spec.model) {
      case Model::Calogero1D:
        row.report = hp_report_calogero_1d(row.n, spec.omega, row.g);
        break;
      case Model::HyperCoulomb:
        row.report = hp_report_hyper_coulomb(row.n, row.g, spec.alpha);
        break;
      case Model::CalogeroD:
        row.report = hp_report_calogero_d(row.n, *row.dim, spec.omega, row.g);
        row.three_body_margin = check_three_body_rescaling(row.n, *row.dim, row.g);
        break;
    }
  } catch (const DomainError& e) {
    row.report.reset();
    row.three_body_margin.reset();
    row.error = e.what();
  }
}

AuditResult summarize(std::vector<AuditRow> rows) {
  AuditResult result;
  double worst = std::numeric_limits<double>::infinity();
  for (const AuditRow& row : rows) {
    if (!row.error.empty()) ++result.error_count;
    if (row.violation()) ++result.violation_count;
    if (row.report) worst = std::min(worst, row.report->margin);
    if (row.three_body_margin) {
      result.min_three_body_margin = result.min_three_body_margin
                                         ? std::min(*result.min_three_body_margin,
                                                    *row.three_body_margin)
                                         : *row.three_body_margin;
    }
  }
  result.worst_margin = std::isfinite(worst) ? worst : 0.0;
  result.rows = std::move(rows);
  return result;
}

}  // namespace

AuditResult audit_grid_serial(const AuditSpec& spec) {
  validate(spec);
  std::vector<AuditRow> rows = enumerate_points(spec);
  for (AuditRow& row : rows) evaluate(spec, row);
  return summarize(std::move(rows));
}

AuditResult audit_grid(const AuditSpec& spec) {
  validate(spec);
  std::vector<AuditRow> rows = enumerate_points(spec);
  const auto count = static_cast<std::ptrdiff_t>(rows.size());
  [[maybe_unused]] const int threads = thread_cap();
#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) evaluate(spec, rows[static_cast<std::size_t>(i)]);
  return summarize(std::move(rows));
}

}  // namespace hallpost
