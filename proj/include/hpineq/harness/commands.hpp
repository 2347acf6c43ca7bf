#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hpineq/harness/report.hpp"
#include "hpineq/linalg/random_pd.hpp"

namespace hpineq::harness {

struct RunConfig {
  std::string family;
  std::optional<int> n;
  int p = 3;
  int dim = 2;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::optional<double> tol;  // defaults depend on the command
  std::size_t max_tensor_dim = 4096;
  double condition_target = 10.0;
  SpectrumKind spectrum = SpectrumKind::kLogUniform;
  unsigned jobs = 1;

  // family parameters
  std::optional<int> k;
  std::optional<int> ell;
  std::optional<int> m;
  std::optional<int> index;

  // scalar-verify
  std::string character = "det";   // det | perm | partition=<λ> | table=<path>
  std::string function = "all";    // convex catalog name or "all"
  std::optional<std::vector<double>> points;  // evaluate one explicit input
  double norm_p = 2.0;

  // counterexample
  std::string strategy = "random";
  bool include_known = false;
  double range = 10.0;
};

struct CommandResult {
  TrialReport report;
  int exit_code = kExitOk;
};

// Each runner throws InputError (usage, exit 2) or BudgetError (exit 3) for
// invalid configurations; run_guarded maps those to a result.
CommandResult run_verify(const RunConfig& cfg);
CommandResult run_counterexample(const RunConfig& cfg);
CommandResult run_scalar_verify(const RunConfig& cfg);

// Value of d_chi^G at the matrix in `matrix_path`; selector is det, perm,
// partition=<comma list> or table=<path>.
std::complex<double> run_immanant(const std::string& matrix_path, const std::string& selector);
std::string format_complex(std::complex<double> z);

}  // namespace hpineq::harness
