#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hpineq/scalar/convex.hpp"
#include "hpineq/scalar/inequalities.hpp"

namespace hpineq::scalar {

enum class SearchFamily { kFreudenthal, kHlawkaPop };
enum class SearchStrategy { kRandom, kCoordinateDescent };

std::string_view search_family_name(SearchFamily f);
std::optional<SearchFamily> parse_search_family(std::string_view name);
std::string_view strategy_name(SearchStrategy s);
std::optional<SearchStrategy> parse_strategy(std::string_view name);

struct SearchConfig {
  SearchFamily family = SearchFamily::kHlawkaPop;
  int n = 4;
  int dim = 2;  // vector dimension (Freudenthal only)
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  SearchStrategy strategy = SearchStrategy::kRandom;
  ConvexFunction f{};        // HLAWKA_POP only
  double range = 10.0;       // scalar points are drawn from [-range, range]
  bool include_known = false;  // trial 0 evaluates (-10, 1, 1, 9) (HLAWKA_POP, n = 4)
  double tolerance = kScalarTolerance;
  unsigned jobs = 1;
};

struct SearchViolation {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  VectorTuple inputs;  // scalar families store one 1-vector per point
  double margin = 0.0;
  double scale = 1.0;
};

struct SearchResult {
  std::vector<SearchViolation> violations;  // ordered by trial index
  double min_margin = 0.0;
  double min_scaled_margin = 0.0;  // margin / max(1, scale)
  std::size_t trials = 0;
};

// Margin of the family at `inputs` (scalar families read inputs[i][0]).
ScalarCheckResult evaluate_search_point(const SearchConfig& cfg, const VectorTuple& inputs);

// Deterministic for a given config regardless of cfg.jobs: trial t draws
// from derive_seed(cfg.seed, t) and results are merged by trial index. A
// candidate is reported only if a fresh re-evaluation of its stored inputs
// still has margin < -tolerance * scale.
SearchResult counterexample_search(const SearchConfig& cfg);

}  // namespace hpineq::scalar
