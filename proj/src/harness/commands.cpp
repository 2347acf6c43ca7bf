#include "hpineq/harness/commands.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "hpineq/error.hpp"
#include "hpineq/linalg/kron.hpp"
#include "hpineq/linalg/matrix_io.hpp"
#include "hpineq/linalg/spectrum.hpp"
#include "hpineq/matfun/gmf.hpp"
#include "hpineq/parallel.hpp"
#include "hpineq/scalar/inequalities.hpp"
#include "hpineq/scalar/search.hpp"
#include "hpineq/seeding.hpp"
#include "hpineq/sums/tensor_sums.hpp"

namespace hpineq::harness {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kStatedWithoutProof =
    "theorem-stated-without-proof: margins are reported, violations do not fail the run";
constexpr const char* kEvaluatorOnly =
    "evaluator-only: no inequality direction is asserted, violations do not fail the run";
constexpr const char* kHlawkaPopWeights =
    "hlawka-pop weights follow the printed pattern (odd subset sizes j weighted by j on the "
    "left, even on the right) extended to general n";

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

std::vector<double> flatten_matrices(const std::vector<HermitianMatrix>& mats) {
  std::vector<double> v;
  for (const auto& a : mats)
    for (const cplx& z : a.entries()) {
      v.push_back(z.real());
      v.push_back(z.imag());
    }
  return v;
}

std::vector<HermitianMatrix> sample_tuple(const RunConfig& cfg, int n, std::uint64_t trial_seed) {
  std::vector<HermitianMatrix> mats;
  mats.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    mats.push_back(random_pd({.dim = static_cast<std::size_t>(cfg.dim),
                              .seed = derive_seed(trial_seed, static_cast<std::uint64_t>(j)),
                              .condition_target = cfg.condition_target,
                              .spectrum = cfg.spectrum}));
  }
  return mats;
}

int family_arity(sums::Family f, const RunConfig& cfg) {
  if (auto a = sums::fixed_arity(f)) {
    require(!cfg.n || *cfg.n == *a, std::string(sums::family_name(f)) + " takes exactly " +
                                        std::to_string(*a) + " matrices");
    return *a;
  }
  return cfg.n.value_or(4);
}

sums::TensorSumParams tensor_params(const RunConfig& cfg) {
  return {.p = cfg.p, .k = cfg.k, .ell = cfg.ell, .m = cfg.m, .index = cfg.index};
}

void put_family_params(ordered_json& params, const RunConfig& cfg) {
  if (cfg.k) params["k"] = *cfg.k;
  if (cfg.ell) params["ell"] = *cfg.ell;
  if (cfg.m) params["m"] = *cfg.m;
  if (cfg.index) params["index"] = *cfg.index;
}

bool proven_operator_family(sums::Family f) {
  return f != sums::Family::kPopSubsets && f != sums::Family::kPopLevels;
}

void validate_common(const RunConfig& cfg) {
  require(cfg.dim >= 1, "--dim must be >= 1");
  require(cfg.jobs >= 1, "--jobs must be >= 1");
  require(cfg.condition_target >= 1.0, "--condition must be >= 1");
}

struct TrialSlot {
  std::vector<ViolationRecord> violations;
  std::vector<std::pair<double, double>> margins;  // (margin, scale)
  std::size_t equalities = 0;
};

void merge(TrialReport& report, std::vector<TrialSlot>& slots) {
  for (auto& s : slots) {
    for (auto& [m, sc] : s.margins) report.record_margin(m, sc);
    report.equality_cases += s.equalities;
    for (auto& v : s.violations) report.violations.push_back(std::move(v));
  }
}

// ---- scalar-verify helpers ----

std::vector<scalar::ConvexFunction> selected_functions(const std::string& name) {
  std::vector<scalar::ConvexFunction> out;
  if (name == "all") {
    for (auto k : scalar::all_convex_kinds()) out.push_back({k});
    return out;
  }
  const auto k = scalar::parse_convex(name);
  require(k.has_value(), "unknown convex function '" + name + "'");
  out.push_back({*k});
  return out;
}

matfun::GeneralizedMatrixFunction make_gmf(const std::string& selector, int degree) {
  if (selector == "det") {
    return {matfun::FullSymmetric{degree}, matfun::SignCharacter{}};
  }
  if (selector == "perm") {
    return {matfun::FullSymmetric{degree}, matfun::TrivialCharacter{}};
  }
  if (selector.rfind("partition=", 0) == 0) {
    return {matfun::FullSymmetric{degree},
            matfun::PartitionCharacter{matfun::Partition::parse(selector.substr(10))}};
  }
  if (selector.rfind("table=", 0) == 0) {
    matfun::CharacterTable t = matfun::load_character_table(selector.substr(6));
    return {std::move(t.group), std::move(t.character)};
  }
  throw InputError("character selector must be det, perm, partition=<parts> or table=<path>");
}

enum class ScalarSuite {
  kNormHlawka,
  kRadu,
  kFreudenthal,
  kJensen,
  kPopoviciu,
  kVasc,
  kPcz,
  kFunctionalHlawka,
  kHlawkaPop,
  kConvexLevels
};

std::optional<ScalarSuite> parse_scalar_suite(const std::string& name) {
  static const std::pair<const char*, ScalarSuite> kNames[] = {
      {"norm-hlawka", ScalarSuite::kNormHlawka},
      {"radu", ScalarSuite::kRadu},
      {"freudenthal", ScalarSuite::kFreudenthal},
      {"jensen", ScalarSuite::kJensen},
      {"popoviciu", ScalarSuite::kPopoviciu},
      {"vasc", ScalarSuite::kVasc},
      {"pcz", ScalarSuite::kPcz},
      {"functional-hlawka", ScalarSuite::kFunctionalHlawka},
      {"hlawka-pop", ScalarSuite::kHlawkaPop},
      {"convex-levels", ScalarSuite::kConvexLevels},
  };
  for (const auto& [n, s] : kNames)
    if (name == n) return s;
  return std::nullopt;
}

bool uses_vectors(ScalarSuite s) {
  return s == ScalarSuite::kNormHlawka || s == ScalarSuite::kRadu || s == ScalarSuite::kFreudenthal;
}

int default_points(ScalarSuite s) {
  switch (s) {
    case ScalarSuite::kNormHlawka:
    case ScalarSuite::kPopoviciu:
    case ScalarSuite::kFunctionalHlawka:
      return 3;
    case ScalarSuite::kPcz:
    case ScalarSuite::kConvexLevels:
      return 5;
    default:
      return 4;
  }
}

struct Evaluated {
  scalar::ScalarCheckResult result;
  std::string detail;
};

// Evaluates one input tuple for a scalar suite, once per variant (convex
// function, Radu k).
std::vector<Evaluated> evaluate_scalar(ScalarSuite suite, const RunConfig& cfg,
                                       const std::vector<scalar::ConvexFunction>& fs,
                                       const scalar::VectorTuple& vecs,
                                       const std::vector<double>& xs) {
  std::vector<Evaluated> out;
  const scalar::Norm norm{cfg.norm_p};
  const int n = static_cast<int>(uses_vectors(suite) ? vecs.size() : xs.size());
  switch (suite) {
    case ScalarSuite::kNormHlawka:
      out.push_back({scalar::norm_hlawka(vecs.at(0), vecs.at(1), vecs.at(2), norm), ""});
      return out;
    case ScalarSuite::kFreudenthal:
      out.push_back({scalar::freudenthal_alternating(vecs, norm), ""});
      return out;
    case ScalarSuite::kRadu:
      if (cfg.k) {
        out.push_back({scalar::radu_check(vecs, *cfg.k, norm), "k=" + std::to_string(*cfg.k)});
      } else {
        for (int k = 2; k <= n; ++k)
          out.push_back({scalar::radu_check(vecs, k, norm), "k=" + std::to_string(k)});
      }
      return out;
    default:
      break;
  }
  for (const auto& f : fs) {
    const std::string name(scalar::convex_name(f.kind));
    switch (suite) {
      case ScalarSuite::kJensen:
        out.push_back({scalar::jensen_check<double>(f, xs), name});
        break;
      case ScalarSuite::kPopoviciu:
        require(xs.size() == 3, "popoviciu takes exactly 3 points");
        out.push_back({scalar::popoviciu_check<double>(f, xs[0], xs[1], xs[2]), name});
        break;
      case ScalarSuite::kVasc:
        out.push_back({scalar::vasc_check<double>(f, xs), name});
        break;
      case ScalarSuite::kPcz: {
        const int m = cfg.m.value_or(3);
        out.push_back({scalar::pcz_check<double>(f, xs, m), name});
        break;
      }
      case ScalarSuite::kFunctionalHlawka:
        require(xs.size() == 3, "functional-hlawka takes exactly 3 points");
        out.push_back({scalar::functional_hlawka<double>(f, xs[0], xs[1], xs[2]), name});
        break;
      case ScalarSuite::kHlawkaPop:
        out.push_back({scalar::conjecture_hlawka_pop_eval<double>(f, xs), name});
        break;
      case ScalarSuite::kConvexLevels:
        out.push_back({scalar::convex_levels_eval<double>(f, xs, cfg.k.value_or(1),
                                                          cfg.ell.value_or(2), cfg.m.value_or(3)),
                       name});
        break;
      default:
        break;
    }
  }
  return out;
}

bool scalar_suite_proven(ScalarSuite s, int n) {
  switch (s) {
    case ScalarSuite::kFunctionalHlawka:
    case ScalarSuite::kHlawkaPop:
    case ScalarSuite::kConvexLevels:
      return false;
    case ScalarSuite::kFreudenthal:
      return n == 3;
    default:
      return true;
  }
}

ordered_json vectors_json(const scalar::VectorTuple& v) { return ordered_json(v); }

CommandResult run_gmf_suite(sums::Family family, const RunConfig& cfg, Clock::time_point start) {
  const int n = family_arity(family, cfg);
  const matfun::GeneralizedMatrixFunction d = make_gmf(cfg.character, cfg.dim);
  const double tol = cfg.tol.value_or(matfun::kScalarCorollaryTolerance);
  const sums::TensorSumParams params = tensor_params(cfg);
  sums::expression_for(family, n, params);  // parameter validation up front

  TrialReport report;
  report.command = "scalar-verify";
  report.family = std::string(sums::family_name(family));
  report.params["n"] = n;
  report.params["dim"] = cfg.dim;
  report.params["character"] = matfun::describe(d.character());
  report.params["conditionTarget"] = cfg.condition_target;
  put_family_params(report.params, cfg);
  report.trials = cfg.trials;
  report.seed = cfg.seed;
  report.tolerance = tol;
  const bool proven = proven_operator_family(family) &&
                      !std::holds_alternative<matfun::TableCharacter>(d.character());
  if (!proven_operator_family(family)) report.interpretation_flags.push_back(kStatedWithoutProof);
  if (std::holds_alternative<matfun::TableCharacter>(d.character())) {
    report.interpretation_flags.push_back(
        "table character: irreducibility is not verified, violations do not fail the run");
  }

  std::vector<TrialSlot> slots(cfg.trials);
  parallel_for(cfg.trials, cfg.jobs, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(cfg.seed, t);
    const std::vector<HermitianMatrix> mats = sample_tuple(cfg, n, seed);
    const matfun::ScalarMargin r = matfun::scalar_inequality_check(family, mats, params, d, tol);
    slots[t].margins.emplace_back(r.margin, r.scale);
    if (!r.holds) {
      slots[t].violations.push_back(
          {t, seed, digest(flatten_matrices(mats)), "margin", r.margin, r.scale, "", std::nullopt});
    }
  });
  merge(report, slots);
  report.runtime_ms = elapsed_ms(start);
  const int code = proven && !report.violations.empty() ? kExitViolation : kExitOk;
  return {std::move(report), code};
}

}  // namespace

CommandResult run_verify(const RunConfig& cfg) {
  const auto start = Clock::now();
  validate_common(cfg);
  const auto family = sums::parse_family(cfg.family);
  require(family.has_value(), "unknown operator family '" + cfg.family + "'");
  const int n = family_arity(*family, cfg);
  const sums::TensorSumParams params = tensor_params(cfg);
  const Budget budget{cfg.max_tensor_dim};
  sums::expression_for(*family, n, params);
  checked_tensor_dim(static_cast<std::size_t>(cfg.dim), cfg.p, budget);
  const double tol = cfg.tol.value_or(kDefaultPsdTolerance);

  TrialReport report;
  report.command = "verify";
  report.family = cfg.family;
  report.params["n"] = n;
  report.params["p"] = cfg.p;
  report.params["dim"] = cfg.dim;
  report.params["conditionTarget"] = cfg.condition_target;
  report.params["spectrum"] = cfg.spectrum == SpectrumKind::kUniform ? "uniform" : "loguniform";
  report.params["maxTensorDim"] = cfg.max_tensor_dim;
  put_family_params(report.params, cfg);
  report.trials = cfg.trials;
  report.seed = cfg.seed;
  report.tolerance = tol;
  if (!proven_operator_family(*family)) report.interpretation_flags.push_back(kStatedWithoutProof);

  std::vector<TrialSlot> slots(cfg.trials);
  parallel_for(cfg.trials, cfg.jobs, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(cfg.seed, t);
    const std::vector<HermitianMatrix> mats = sample_tuple(cfg, n, seed);
    const sums::Difference diff = sums::build_difference(*family, mats, params, budget);
    const LoewnerCertificate cert = certify_psd(diff.matrix, tol);
    slots[t].margins.emplace_back(cert.min_eigenvalue, cert.scale);
    if (cert.verdict == Verdict::kEquality) ++slots[t].equalities;
    if (cert.verdict == Verdict::kFails) {
      slots[t].violations.push_back({t, seed, digest(flatten_matrices(mats)), "minEigenvalue",
                                     cert.min_eigenvalue, cert.scale, "", std::nullopt});
    }
  });
  merge(report, slots);
  report.runtime_ms = elapsed_ms(start);
  const bool fail = proven_operator_family(*family) && !report.violations.empty();
  return {std::move(report), fail ? kExitViolation : kExitOk};
}

CommandResult run_counterexample(const RunConfig& cfg) {
  const auto start = Clock::now();
  validate_common(cfg);
  const auto family = scalar::parse_search_family(cfg.family);
  require(family.has_value(), "counterexample family must be freudenthal or hlawka-pop");
  const auto strategy = scalar::parse_strategy(cfg.strategy);
  require(strategy.has_value(), "strategy must be random or coordinate-descent");

  scalar::SearchConfig sc;
  sc.family = *family;
  sc.n = cfg.n.value_or(4);
  sc.dim = cfg.dim;
  sc.trials = cfg.trials;
  sc.seed = cfg.seed;
  sc.strategy = *strategy;
  sc.include_known = cfg.include_known;
  sc.range = cfg.range;
  sc.tolerance = cfg.tol.value_or(scalar::kScalarTolerance);
  sc.jobs = cfg.jobs;
  if (*family == scalar::SearchFamily::kHlawkaPop) {
    const auto fs = selected_functions(cfg.function == "all" ? "abs" : cfg.function);
    sc.f = fs.front();
  }

  const scalar::SearchResult res = scalar::counterexample_search(sc);

  TrialReport report;
  report.command = "counterexample";
  report.family = cfg.family;
  report.params["n"] = sc.n;
  report.params["strategy"] = std::string(scalar::strategy_name(sc.strategy));
  if (*family == scalar::SearchFamily::kFreudenthal) {
    report.params["dim"] = sc.dim;
    report.params["normP"] = cfg.norm_p;
  } else {
    report.params["function"] = std::string(scalar::convex_name(sc.f.kind));
    report.params["range"] = sc.range;
    report.params["includeKnown"] = sc.include_known;
    report.interpretation_flags.push_back(kHlawkaPopWeights);
  }
  report.trials = res.trials;
  report.evaluations = res.trials;
  report.seed = cfg.seed;
  report.tolerance = sc.tolerance;
  if (res.trials) {
    report.min_margin = res.min_margin;
    report.min_scaled_margin = res.min_scaled_margin;
  }
  for (const auto& v : res.violations) {
    std::vector<double> flat;
    for (const auto& vec : v.inputs) flat.insert(flat.end(), vec.begin(), vec.end());
    report.violations.push_back({v.trial, v.seed, digest(flat), "margin", v.margin, v.scale,
                                 "re-verified", vectors_json(v.inputs)});
  }
  report.runtime_ms = elapsed_ms(start);
  return {std::move(report), kExitOk};
}

CommandResult run_scalar_verify(const RunConfig& cfg) {
  const auto start = Clock::now();
  validate_common(cfg);
  if (auto family = sums::parse_family(cfg.family)) return run_gmf_suite(*family, cfg, start);

  const auto suite = parse_scalar_suite(cfg.family);
  require(suite.has_value(), "unknown scalar family '" + cfg.family + "'");
  const auto fs = selected_functions(cfg.function);
  const double tol = cfg.tol.value_or(scalar::kScalarTolerance);
  require(tol == scalar::kScalarTolerance,
          "scalar suites use the fixed relative tolerance 1e-12");

  TrialReport report;
  report.command = "scalar-verify";
  report.family = cfg.family;
  report.seed = cfg.seed;
  report.tolerance = tol;

  int n = cfg.n.value_or(default_points(*suite));
  if (cfg.points) {
    require(!uses_vectors(*suite), "--points applies to scalar (non-vector) families");
    n = static_cast<int>(cfg.points->size());
  }
  report.params["n"] = n;
  if (uses_vectors(*suite)) {
    report.params["dim"] = cfg.dim;
    report.params["normP"] = cfg.norm_p;
  } else {
    report.params["function"] = cfg.function;
  }
  put_family_params(report.params, cfg);
  if (*suite == ScalarSuite::kHlawkaPop) report.interpretation_flags.push_back(kHlawkaPopWeights);

  const bool proven = scalar_suite_proven(*suite, n);
  if (!proven && !cfg.points) report.interpretation_flags.push_back(kEvaluatorOnly);

  if (cfg.points) {
    // A single explicit input: the run fails iff that input violates.
    report.params["points"] = *cfg.points;
    report.trials = 1;
    report.interpretation_flags.push_back(
        "explicit-point evaluation: exit status reports this input's margin");
    for (const auto& e : evaluate_scalar(*suite, cfg, fs, {}, *cfg.points)) {
      report.record_margin(e.result.margin, e.result.scale);
      if (!e.result.holds) {
        report.violations.push_back({0, 0, digest(*cfg.points), "margin", e.result.margin,
                                     e.result.scale, e.detail, ordered_json(*cfg.points)});
      }
    }
    report.runtime_ms = elapsed_ms(start);
    const int code = report.violations.empty() ? kExitOk : kExitViolation;
    return {std::move(report), code};
  }

  report.trials = cfg.trials;
  std::vector<TrialSlot> slots(cfg.trials);
  parallel_for(cfg.trials, cfg.jobs, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(cfg.seed, t);
    std::mt19937_64 rng(seed);
    scalar::VectorTuple vecs;
    std::vector<double> xs;
    std::vector<double> flat;
    if (uses_vectors(*suite)) {
      std::normal_distribution<double> g(0.0, 1.0);
      vecs.assign(static_cast<std::size_t>(n), scalar::Vector(static_cast<std::size_t>(cfg.dim)));
      for (auto& v : vecs)
        for (double& x : v) {
          x = g(rng);
          flat.push_back(x);
        }
    } else {
      std::normal_distribution<double> g(0.0, 2.0);
      xs.resize(static_cast<std::size_t>(n));
      for (double& x : xs) x = g(rng);
      flat = xs;
    }
    for (const auto& e : evaluate_scalar(*suite, cfg, fs, vecs, xs)) {
      slots[t].margins.emplace_back(e.result.margin, e.result.scale);
      if (!e.result.holds) {
        slots[t].violations.push_back({t, seed, digest(flat), "margin", e.result.margin,
                                       e.result.scale, e.detail,
                                       uses_vectors(*suite) ? vectors_json(vecs) : ordered_json(xs)});
      }
    }
  });
  merge(report, slots);
  report.runtime_ms = elapsed_ms(start);
  const int code = proven && !report.violations.empty() ? kExitViolation : kExitOk;
  return {std::move(report), code};
}

std::complex<double> run_immanant(const std::string& matrix_path, const std::string& selector) {
  const ComplexMatrix x = load_matrix(matrix_path);
  const matfun::GeneralizedMatrixFunction d = make_gmf(selector, static_cast<int>(x.dim()));
  return d(x);
}

std::string format_complex(std::complex<double> z) {
  const double re = z.real() + 0.0;  // no "-0" on the console
  if (z.imag() == 0.0) return format_double(re);
  std::string im = format_double(z.imag());
  if (im.front() != '-') im = "+" + im;
  return format_double(re) + im + "i";
}

}  // namespace hpineq::harness
