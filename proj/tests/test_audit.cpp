#include <doctest.h>

#include <cstdlib>
#include <tuple>

#include "hallpost/audit.hpp"
#include "hallpost/errors.hpp"
#include "hallpost/parallel.hpp"

using namespace hallpost;

namespace {

void check_same(const AuditResult& a, const AuditResult& b) {
  REQUIRE(a.rows.size() == b.rows.size());
  CHECK(a.violation_count == b.violation_count);
  CHECK(a.error_count == b.error_count);
  CHECK(a.worst_margin == b.worst_margin);
  CHECK(a.min_three_body_margin == b.min_three_body_margin);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const AuditRow& x = a.rows[i];
    const AuditRow& y = b.rows[i];
    CHECK(x.n == y.n);
    CHECK(x.dim == y.dim);
    CHECK(x.g == y.g);
    CHECK(x.error == y.error);
    REQUIRE(x.report.has_value() == y.report.has_value());
    if (x.report) {
      CHECK(x.report->ratio == y.report->ratio);
      CHECK(x.report->energy == y.report->energy);
      CHECK(x.report->margin == y.report->margin);
    }
    CHECK(x.three_body_margin == y.three_body_margin);
  }
}

}  // namespace

TEST_CASE("default coupling grid") {
  const auto grid = default_g_grid();
  REQUIRE(grid.size() == 25);
  CHECK(grid.front() == 0.0);
  CHECK(grid[1] == 0.25);
  CHECK(grid[20] == 5.0);
  CHECK(grid.back() == 10000.0);
}

TEST_CASE("default audits report no violations") {
  for (Model model : {Model::Calogero1D, Model::HyperCoulomb, Model::CalogeroD}) {
    CAPTURE(to_string(model));
    const AuditResult r = audit_grid(default_audit_spec(model));
    CHECK(r.violation_count == 0);
    CHECK(r.error_count == 0);
    CHECK(r.worst_margin >= 0.0);
    for (const AuditRow& row : r.rows) {
      REQUIRE(row.report.has_value());
      CHECK(row.report->satisfied);
      if (model == Model::HyperCoulomb) CHECK(row.report->ratio <= 1.0);
    }
    if (model == Model::CalogeroD) {
      REQUIRE(r.min_three_body_margin.has_value());
      CHECK(*r.min_three_body_margin >= 0.0);
      CHECK(r.rows.size() == 7u * 5u * 25u);
    }
  }
}

TEST_CASE("rows are ordered by (N, D, g)") {
  AuditSpec spec = default_audit_spec(Model::CalogeroD);
  spec.g_grid = {3.0, 0.5, 0.0, 3.0};
  const AuditResult r = audit_grid(spec);
  CHECK(r.rows.size() == 7u * 5u * 3u);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    const auto& a = r.rows[i - 1];
    const auto& b = r.rows[i];
    CHECK(std::make_tuple(a.n, *a.dim, a.g) < std::make_tuple(b.n, *b.dim, b.g));
  }
}

TEST_CASE("parallel audit matches the serial reference") {
  for (Model model : {Model::Calogero1D, Model::HyperCoulomb, Model::CalogeroD}) {
    AuditSpec spec = default_audit_spec(model);
    spec.n_max = 16;
    check_same(audit_grid(spec), audit_grid_serial(spec));
  }
}

TEST_CASE("invalid ranges are rejected up front") {
  AuditSpec spec = default_audit_spec(Model::HyperCoulomb);
  spec.n_min = 3;
  CHECK_THROWS_AS(audit_grid(spec), DomainError);

  spec = default_audit_spec(Model::Calogero1D);
  spec.n_min = 2;
  CHECK_THROWS_AS(audit_grid(spec), DomainError);

  spec = default_audit_spec(Model::CalogeroD);
  spec.dim_min = 1;
  CHECK_THROWS_AS(audit_grid(spec), DomainError);

  spec = default_audit_spec(Model::CalogeroD);
  spec.g_grid = {-0.1};
  CHECK_THROWS_AS(audit_grid(spec), DomainError);

  spec = default_audit_spec(Model::Calogero1D);
  spec.g_grid.clear();
  CHECK_THROWS_AS(audit_grid(spec), DomainError);
}

TEST_CASE("subcritical couplings are flagged and collapse points recorded") {
  AuditSpec spec = default_audit_spec(Model::Calogero1D);
  spec.n_min = 3;
  spec.n_max = 3;
  spec.g_grid = {-0.25, -0.2, -0.1, 0.0};
  const AuditResult r = audit_grid(spec);
  REQUIRE(r.rows.size() == 4);
  // N (2 beta - 1)^2 < 1 for g = -1/4 and g = -0.2 at N = 3.
  CHECK_FALSE(r.rows[0].error.empty());
  CHECK_FALSE(r.rows[1].error.empty());
  CHECK(r.rows[2].error.empty());
  CHECK(r.rows[2].subcritical);
  CHECK(r.rows[2].report->satisfied);
  CHECK_FALSE(r.rows[3].subcritical);
  CHECK(r.error_count == 2);
  CHECK(r.violation_count == 0);
}

TEST_CASE("HALLPOST_THREADS caps the thread count") {
  ::setenv("HALLPOST_THREADS", "1", 1);
  CHECK(thread_cap() == 1);
  ::setenv("HALLPOST_THREADS", "garbage", 1);
  CHECK(thread_cap() >= 1);
  ::unsetenv("HALLPOST_THREADS");
  CHECK(thread_cap() >= 1);
  if (!openmp_enabled()) CHECK(thread_cap() == 1);
}
