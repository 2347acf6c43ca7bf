#include "hpineq/scalar/search.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "hpineq/parallel.hpp"
#include "hpineq/seeding.hpp"

namespace hpineq::scalar {
namespace {

struct TrialOutcome {
  double margin = 0.0;
  double scaled = 0.0;
  std::optional<SearchViolation> violation;
};

VectorTuple random_point(const SearchConfig& cfg, std::mt19937_64& rng) {
  VectorTuple t(static_cast<std::size_t>(cfg.n));
  if (cfg.family == SearchFamily::kHlawkaPop) {
    std::uniform_real_distribution<double> u(-cfg.range, cfg.range);
    for (auto& v : t) v = {u(rng)};
  } else {
    std::normal_distribution<double> g(0.0, 1.0);
    for (auto& v : t) {
      v.resize(static_cast<std::size_t>(cfg.dim));
      for (double& x : v) x = g(rng);
    }
  }
  return t;
}

double normalized(const ScalarCheckResult& r) { return r.margin / r.scale; }

// Greedy coordinate moves on the scale-normalized margin, halving the step
// whenever a full sweep brings no improvement.
VectorTuple coordinate_descent(const SearchConfig& cfg, VectorTuple x) {
  double best = normalized(evaluate_search_point(cfg, x));
  double step = cfg.family == SearchFamily::kHlawkaPop ? cfg.range / 4.0 : 0.5;
  const double min_step = step * 1e-6;
  for (int sweep = 0; sweep < 200 && step > min_step; ++sweep) {
    bool improved = false;
    for (auto& v : x)
      for (double& coord : v)
        for (double dir : {1.0, -1.0}) {
          const double saved = coord;
          coord = saved + dir * step;
          const double trial = normalized(evaluate_search_point(cfg, x));
          if (trial < best) {
            best = trial;
            improved = true;
          } else {
            coord = saved;
          }
        }
    if (!improved) step *= 0.5;
  }
  return x;
}

}  // namespace

std::string_view search_family_name(SearchFamily f) {
  return f == SearchFamily::kFreudenthal ? "freudenthal" : "hlawka-pop";
}

std::optional<SearchFamily> parse_search_family(std::string_view name) {
  if (name == "freudenthal") return SearchFamily::kFreudenthal;
  if (name == "hlawka-pop") return SearchFamily::kHlawkaPop;
  return std::nullopt;
}

std::string_view strategy_name(SearchStrategy s) {
  return s == SearchStrategy::kRandom ? "random" : "coordinate-descent";
}

std::optional<SearchStrategy> parse_strategy(std::string_view name) {
  if (name == "random") return SearchStrategy::kRandom;
  if (name == "coordinate-descent") return SearchStrategy::kCoordinateDescent;
  return std::nullopt;
}

ScalarCheckResult evaluate_search_point(const SearchConfig& cfg, const VectorTuple& inputs) {
  if (cfg.family == SearchFamily::kFreudenthal) return freudenthal_alternating(inputs);
  std::vector<double> xs;
  xs.reserve(inputs.size());
  for (const auto& v : inputs) xs.push_back(v.at(0));
  return conjecture_hlawka_pop_eval<double>(cfg.f, xs);
}

SearchResult counterexample_search(const SearchConfig& cfg) {
  if (cfg.n < 3) throw InputError("counterexample search needs n >= 3");
  if (cfg.family == SearchFamily::kFreudenthal && cfg.dim < 1) {
    throw InputError("counterexample search needs dim >= 1");
  }
  if (cfg.family == SearchFamily::kHlawkaPop && !(cfg.range > 0.0)) {
    throw InputError("search range must be positive");
  }

  std::vector<TrialOutcome> outcomes(cfg.trials);
  parallel_for(cfg.trials, cfg.jobs, [&](std::size_t t) {
    const std::uint64_t seed = derive_seed(cfg.seed, t);
    std::mt19937_64 rng(seed);
    VectorTuple x;
    if (t == 0 && cfg.include_known && cfg.family == SearchFamily::kHlawkaPop && cfg.n == 4) {
      x = {{-10.0}, {1.0}, {1.0}, {9.0}};
    } else {
      x = random_point(cfg, rng);
      if (cfg.strategy == SearchStrategy::kCoordinateDescent) x = coordinate_descent(cfg, std::move(x));
    }
    const ScalarCheckResult r = evaluate_search_point(cfg, x);
    outcomes[t].margin = r.margin;
    outcomes[t].scaled = r.margin / std::max(1.0, r.scale);
    if (r.margin < -cfg.tolerance * r.scale) {
      const ScalarCheckResult again = evaluate_search_point(cfg, VectorTuple(x));
      if (again.margin < -cfg.tolerance * again.scale) {
        outcomes[t].violation = SearchViolation{t, seed, std::move(x), again.margin, again.scale};
      }
    }
  });

  SearchResult out;
  out.trials = cfg.trials;
  out.min_margin = cfg.trials ? std::numeric_limits<double>::infinity() : 0.0;
  out.min_scaled_margin = out.min_margin;
  for (auto& o : outcomes) {
    out.min_margin = std::min(out.min_margin, o.margin);
    out.min_scaled_margin = std::min(out.min_scaled_margin, o.scaled);
    if (o.violation) out.violations.push_back(std::move(*o.violation));
  }
  return out;
}

}  // namespace hpineq::scalar
