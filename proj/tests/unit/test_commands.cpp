#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "hpineq/error.hpp"
#include "hpineq/harness/commands.hpp"

using namespace hpineq;
using namespace hpineq::harness;

namespace {

std::string without_runtime(TrialReport r) {
  r.runtime_ms = 0;
  return render(r, ReportFormat::kJson) + render(r, ReportFormat::kCsv);
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("hpineq_unit_" + name);
  std::ofstream(path) << body;
  return path.string();
}

bool has_flag_prefix(const TrialReport& r, const std::string& prefix) {
  for (const auto& f : r.interpretation_flags)
    if (f.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("verify is deterministic across job counts") {
  RunConfig cfg;
  cfg.family = "alternating";
  cfg.n = 4;
  cfg.p = 2;
  cfg.trials = 12;
  cfg.seed = 5;
  const auto a = run_verify(cfg);
  cfg.jobs = 3;
  const auto b = run_verify(cfg);
  CHECK(a.exit_code == kExitOk);
  CHECK(without_runtime(a.report) == without_runtime(b.report));
  CHECK(a.report.evaluations == 12);
  CHECK(a.report.violations.size() <= a.report.trials);
}

TEST_CASE("verify hlawka3 at p = 1 is all equality") {
  RunConfig cfg;
  cfg.family = "hlawka3";
  cfg.p = 1;
  cfg.trials = 10;
  const auto r = run_verify(cfg);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report.equality_cases == 10);
  CHECK(r.report.violations.empty());
}

TEST_CASE("verify rejects bad configurations") {
  RunConfig cfg;
  cfg.family = "hlawka3";
  cfg.p = 13;
  cfg.trials = 1;
  CHECK_THROWS_AS(run_verify(cfg), BudgetError);
  cfg.p = 3;
  cfg.max_tensor_dim = 4;
  CHECK_THROWS_AS(run_verify(cfg), BudgetError);
  cfg.max_tensor_dim = 4096;
  cfg.family = "nope";
  CHECK_THROWS_AS(run_verify(cfg), InputError);
  cfg.family = "pop-subsets";
  cfg.n = 4;
  cfg.m = 4;
  CHECK_THROWS_AS(run_verify(cfg), InputError);
}

TEST_CASE("unproven operator families are flagged and never fail") {
  RunConfig cfg;
  cfg.family = "pop-subsets";
  cfg.n = 4;
  cfg.m = 3;
  cfg.p = 2;
  cfg.trials = 5;
  const auto r = run_verify(cfg);
  CHECK(r.exit_code == kExitOk);
  CHECK(has_flag_prefix(r.report, "theorem-stated-without-proof"));

  cfg.family = "hlawka3";
  cfg.n.reset();
  cfg.m.reset();
  CHECK_FALSE(has_flag_prefix(run_verify(cfg).report, "theorem-stated-without-proof"));
}

TEST_CASE("min margin bounds every violation") {
  RunConfig cfg;
  cfg.family = "hlawka-pop";
  cfg.n = 4;
  cfg.trials = 200;
  cfg.include_known = true;
  const auto r = run_counterexample(cfg);
  CHECK(r.exit_code == kExitOk);
  REQUIRE_FALSE(r.report.violations.empty());
  CHECK(r.report.violations.size() <= r.report.trials);
  for (const auto& v : r.report.violations) CHECK(*r.report.min_margin <= v.value);
  CHECK(r.report.violations.front().value == doctest::Approx(-2.0));
}

TEST_CASE("counterexample reports are deterministic") {
  RunConfig cfg;
  cfg.family = "freudenthal";
  cfg.n = 4;
  cfg.dim = 2;
  cfg.trials = 100;
  cfg.seed = 21;
  const auto a = run_counterexample(cfg);
  cfg.jobs = 4;
  CHECK(without_runtime(a.report) == without_runtime(run_counterexample(cfg).report));
}

TEST_CASE("scalar-verify suites") {
  RunConfig cfg;
  cfg.trials = 50;
  for (const char* family : {"norm-hlawka", "radu", "freudenthal", "jensen", "popoviciu", "vasc", "pcz"}) {
    cfg.family = family;
    const auto r = run_scalar_verify(cfg);
    CHECK_MESSAGE(r.exit_code == kExitOk, family);
    CHECK(r.report.violations.empty());
  }
  cfg.family = "hlawka-pop";
  cfg.n = 4;
  const auto pop = run_scalar_verify(cfg);
  CHECK(pop.exit_code == kExitOk);
  CHECK(has_flag_prefix(pop.report, "evaluator-only"));

  cfg.points = std::vector<double>{-10, 1, 1, 9};
  cfg.function = "abs";
  const auto pts = run_scalar_verify(cfg);
  CHECK(pts.exit_code == kExitViolation);
  REQUIRE(pts.report.violations.size() == 1);
  CHECK(pts.report.violations[0].value == -2.0);

  cfg.points = std::vector<double>{1, 2, 3, 4};
  CHECK(run_scalar_verify(cfg).exit_code == kExitOk);

  cfg.points.reset();
  cfg.tol = 1e-6;
  CHECK_THROWS_AS(run_scalar_verify(cfg), InputError);
  cfg.tol.reset();
  cfg.family = "nope";
  CHECK_THROWS_AS(run_scalar_verify(cfg), InputError);
}

TEST_CASE("scalar-verify over operator families") {
  RunConfig cfg;
  cfg.family = "hlawka3";
  cfg.dim = 3;
  cfg.trials = 20;
  for (const char* ch : {"det", "perm", "partition=2,1"}) {
    cfg.character = ch;
    const auto r = run_scalar_verify(cfg);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.report.violations.empty());
  }
  cfg.character = "partition=2,2";
  CHECK_THROWS_AS(run_scalar_verify(cfg), InputError);
}

TEST_CASE("immanant") {
  const std::string ident = temp_file(
      "ident.json", R"({"dim": 3, "entries": [[1,0],[0,0],[0,0],[0,0],[1,0],[0,0],[0,0],[0,0],[1,0]]})");
  const std::string ones =
      temp_file("ones.json", R"({"dim": 3, "entries": [[1,0],[1,0],[1,0],[1,0],[1,0],[1,0],[1,0],[1,0],[1,0]]})");
  const std::string table = temp_file(
      "c3.json", R"({"degree": 3, "elements": [{"perm": [0,1,2], "value": 1}, {"perm": [1,2,0], "value": 1},
                    {"perm": [2,0,1], "value": 1}]})");
  CHECK(run_immanant(ident, "det") == std::complex<double>(1.0));
  CHECK(run_immanant(ones, "perm") == std::complex<double>(6.0));
  CHECK(run_immanant(ones, "partition=2,1") == std::complex<double>(0.0));
  CHECK(run_immanant(ident, "partition=2,1") == std::complex<double>(2.0));
  CHECK(run_immanant(ones, "table=" + table) == std::complex<double>(3.0));
  CHECK_THROWS_AS(run_immanant(ident, "partition=2,2"), InputError);
  CHECK_THROWS_AS(run_immanant(ident, "bogus"), InputError);
  CHECK_THROWS_AS(run_immanant(temp_file("bad.json", "{not json"), "det"), InputError);

  CHECK(format_complex({2.0, 0.0}) == "2");
  CHECK(format_complex({1.0, -0.5}) == "1-0.5i");
  CHECK(format_complex({0.0, 3.0}) == "0+3i");
}
