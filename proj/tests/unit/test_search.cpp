#include "doctest.h"

#include "hpineq/error.hpp"
#include "hpineq/scalar/search.hpp"

using namespace hpineq;
using namespace hpineq::scalar;

namespace {

void check_same(const SearchResult& a, const SearchResult& b) {
  CHECK(a.trials == b.trials);
  CHECK(a.min_margin == b.min_margin);
  CHECK(a.min_scaled_margin == b.min_scaled_margin);
  REQUIRE(a.violations.size() == b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    CHECK(a.violations[i].trial == b.violations[i].trial);
    CHECK(a.violations[i].seed == b.violations[i].seed);
    CHECK(a.violations[i].inputs == b.violations[i].inputs);
    CHECK(a.violations[i].margin == b.violations[i].margin);
  }
}

}  // namespace

TEST_CASE("names round-trip") {
  for (auto f : {SearchFamily::kFreudenthal, SearchFamily::kHlawkaPop})
    CHECK(parse_search_family(search_family_name(f)) == f);
  for (auto s : {SearchStrategy::kRandom, SearchStrategy::kCoordinateDescent})
    CHECK(parse_strategy(strategy_name(s)) == s);
  CHECK_FALSE(parse_search_family("hlawka3").has_value());
}

TEST_CASE("include_known reports the n = 4 counterexample at trial 0") {
  SearchConfig cfg;
  cfg.trials = 20;
  cfg.seed = 9;
  cfg.include_known = true;
  const SearchResult r = counterexample_search(cfg);
  REQUIRE_FALSE(r.violations.empty());
  const auto& v = r.violations.front();
  CHECK(v.trial == 0);
  CHECK(v.margin == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(v.inputs == VectorTuple{{-10.0}, {1.0}, {1.0}, {9.0}});
  CHECK(r.min_margin <= v.margin);
}

TEST_CASE("n = 3 searches find nothing") {
  for (auto strategy : {SearchStrategy::kRandom, SearchStrategy::kCoordinateDescent}) {
    SearchConfig pop;
    pop.n = 3;
    pop.trials = strategy == SearchStrategy::kRandom ? 500 : 40;
    pop.strategy = strategy;
    for (ConvexKind k : all_convex_kinds()) {
      pop.f = ConvexFunction{k};
      CHECK(counterexample_search(pop).violations.empty());
    }
    SearchConfig fr = pop;
    fr.family = SearchFamily::kFreudenthal;
    fr.dim = 3;
    CHECK(counterexample_search(fr).violations.empty());
  }
}

TEST_CASE("search results do not depend on the job count") {
  for (auto family : {SearchFamily::kFreudenthal, SearchFamily::kHlawkaPop}) {
    for (auto strategy : {SearchStrategy::kRandom, SearchStrategy::kCoordinateDescent}) {
      SearchConfig cfg;
      cfg.family = family;
      cfg.strategy = strategy;
      cfg.n = 5;
      cfg.trials = strategy == SearchStrategy::kRandom ? 300 : 20;
      cfg.seed = 77;
      cfg.jobs = 1;
      const SearchResult one = counterexample_search(cfg);
      cfg.jobs = 4;
      check_same(one, counterexample_search(cfg));
      check_same(one, counterexample_search(cfg));
    }
  }
}

TEST_CASE("every reported violation re-verifies") {
  SearchConfig cfg;
  cfg.n = 4;
  cfg.trials = 60;
  cfg.seed = 3;
  cfg.strategy = SearchStrategy::kCoordinateDescent;
  const SearchResult r = counterexample_search(cfg);
  CHECK(r.violations.size() <= r.trials);
  for (const auto& v : r.violations) {
    const auto again = evaluate_search_point(cfg, v.inputs);
    CHECK(again.margin == v.margin);
    CHECK(again.margin < -cfg.tolerance * again.scale);
    CHECK(r.min_margin <= v.margin);
  }
}

TEST_CASE("invalid search configs") {
  SearchConfig cfg;
  cfg.n = 2;
  CHECK_THROWS_AS(counterexample_search(cfg), InputError);
  cfg.n = 4;
  cfg.range = 0.0;
  CHECK_THROWS_AS(counterexample_search(cfg), InputError);
  cfg.family = SearchFamily::kFreudenthal;
  cfg.dim = 0;
  CHECK_THROWS_AS(counterexample_search(cfg), InputError);
}
