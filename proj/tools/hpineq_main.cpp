#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hpineq/error.hpp"
#include "hpineq/harness/commands.hpp"

namespace {

using namespace hpineq;
using namespace hpineq::harness;

struct Output {
  std::string path;
  std::string format = "json";
};

void add_common(CLI::App* app, RunConfig& cfg, Output& out) {
  app->add_option("--seed", cfg.seed, "master seed");
  app->add_option("--trials", cfg.trials, "number of trials")->check(CLI::NonNegativeNumber);
  app->add_option("--tol", cfg.tol, "tolerance (relative to the reported scale)");
  app->add_option("--max-dim", cfg.max_tensor_dim, "largest tensor dimension m^p allowed");
  app->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--out", out.path, "write the report here instead of stdout");
  app->add_option("--format", out.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void add_family_params(CLI::App* app, RunConfig& cfg) {
  app->add_option("--n", cfg.n, "number of inputs");
  app->add_option("--dim", cfg.dim, "matrix or vector dimension");
  app->add_option("--k", cfg.k, "subset level / radu k");
  app->add_option("--ell", cfg.ell, "middle level (pop-levels)");
  app->add_option("--m", cfg.m, "subset size (pop-subsets, pcz) or top level");
  app->add_option("--index", cfg.index, "distinguished input (zhang), 0-based");
  app->add_option("--condition", cfg.condition_target, "target condition number of samples");
  app->add_option_function<std::string>(
         "--spectrum",
         [&cfg](const std::string& s) {
           cfg.spectrum = s == "uniform" ? SpectrumKind::kUniform : SpectrumKind::kLogUniform;
         },
         "interior eigenvalue law")
      ->check(CLI::IsMember({"uniform", "loguniform"}));
}

int emit(const CommandResult& r, const Output& out) {
  const ReportFormat fmt = out.format == "csv" ? ReportFormat::kCsv : ReportFormat::kJson;
  const std::string text = render(r.report, fmt);
  if (out.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw InputError("cannot write " + out.path);
    f << text;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for Hlawka/Popoviciu-type tensor and matrix inequalities"};
  app.require_subcommand(1);

  RunConfig cfg;
  Output out;

  auto* verify = app.add_subcommand("verify", "certify an operator inequality on random PD inputs");
  verify->add_option("--family", cfg.family)->required();
  verify->add_option("--p", cfg.p, "tensor power");
  add_family_params(verify, cfg);
  add_common(verify, cfg, out);

  auto* counter = app.add_subcommand("counterexample", "search for violations");
  counter->add_option("--family", cfg.family, "freudenthal | hlawka-pop")->required();
  counter->add_option("--n", cfg.n);
  counter->add_option("--dim", cfg.dim, "vector dimension (freudenthal)");
  counter->add_option("--strategy", cfg.strategy, "random | coordinate-descent");
  counter->add_option("--function", cfg.function, "convex function (hlawka-pop)");
  counter->add_option("--range", cfg.range, "points are drawn from [-range, range]");
  counter->add_flag("--include-known", cfg.include_known, "evaluate (-10, 1, 1, 9) first");
  add_common(counter, cfg, out);

  std::string matrix_path;
  std::string selector = "det";
  auto* imm = app.add_subcommand("immanant", "evaluate d_chi^G at a matrix file");
  imm->add_option("matrix", matrix_path, "matrix JSON file")->required();
  imm->add_option("--char", selector, "det | perm | partition=<parts> | table=<path>");
  add_common(imm, cfg, out);

  auto* sv = app.add_subcommand("scalar-verify", "scalar inequality suites");
  sv->add_option("--family", cfg.family)->required();
  sv->add_option("--char", cfg.character, "det | perm | partition=<parts> | table=<path>");
  sv->add_option("--function", cfg.function, "convex function or 'all'");
  sv->add_option("--points", cfg.points, "evaluate a single explicit input")->delimiter(',');
  sv->add_option("--norm-p", cfg.norm_p, "p of the vector p-norm");
  add_family_params(sv, cfg);
  add_common(sv, cfg, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return emit(run_verify(cfg), out);
    if (*counter) return emit(run_counterexample(cfg), out);
    if (*sv) return emit(run_scalar_verify(cfg), out);
    const std::string value = format_complex(run_immanant(matrix_path, selector)) + "\n";
    if (out.path.empty()) {
      std::cout << value;
    } else {
      std::ofstream(out.path, std::ios::binary) << value;
    }
    return kExitOk;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
