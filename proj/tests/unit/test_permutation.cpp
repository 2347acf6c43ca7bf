#include "doctest.h"

#include <algorithm>

#include "hpineq/error.hpp"
#include "hpineq/matfun/permutation.hpp"

using namespace hpineq;
using namespace hpineq::matfun;

TEST_CASE("partitions") {
  CHECK(Partition({3, 2, 1}).size() == 6);
  CHECK(Partition({3, 2, 1}).length() == 3);
  CHECK(Partition::parse("2,1") == Partition({2, 1}));
  CHECK(Partition::parse(" 3, 3 ,1") == Partition({3, 3, 1}));
  CHECK(Partition({4, 1}).to_string() == "4,1");
  CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), InputError);
  CHECK_THROWS_AS(Partition({2, 0}), InputError);
  CHECK_THROWS_AS(Partition::parse("2,x"), InputError);
  CHECK_THROWS_AS(Partition::parse(""), InputError);

  // p(m) for m = 1..8
  const int counts[] = {1, 2, 3, 5, 7, 11, 15, 22};
  for (int m = 1; m <= 8; ++m) {
    const auto ps = partitions_of(m);
    CHECK(static_cast<int>(ps.size()) == counts[m - 1]);
    CHECK(ps.front() == Partition({m}));
    CHECK(ps.back() == Partition(std::vector<int>(static_cast<std::size_t>(m), 1)));
    CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
    for (const auto& p : ps) CHECK(p.size() == m);
  }
}

TEST_CASE("permutations") {
  CHECK_THROWS_AS(Permutation({0, 0}), InputError);
  CHECK_THROWS_AS(Permutation({1, 2}), InputError);
  const auto c = Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}});
  CHECK(c.images() == std::vector<int>{1, 2, 0, 4, 3});
  CHECK(c.cycle_type() == Partition({3, 2}));
  CHECK(c.sign() == -1);
  CHECK(Permutation::identity(4).cycle_type() == Partition({1, 1, 1, 1}));
  CHECK(Permutation::identity(4).sign() == 1);
  CHECK(c.compose(c.inverse()).is_identity());
  const auto t = Permutation::from_cycles(3, {{0, 1}});
  const auto r = Permutation::from_cycles(3, {{0, 1, 2}});
  // (t o r)(0) = t(r(0)) = t(1) = 0
  CHECK(t.compose(r)(0) == 0);
  CHECK(t.compose(r)(1) == 2);
  CHECK(t.compose(r).sign() == t.sign() * r.sign());
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(t.compose(Permutation::identity(4)), InputError);
}

TEST_CASE("full symmetric group enumeration") {
  const auto s3 = enumerate_group(FullSymmetric{3});
  REQUIRE(s3.size() == 6);
  CHECK(s3.front().images() == std::vector<int>{0, 1, 2});
  CHECK(s3.back().images() == std::vector<int>{2, 1, 0});
  CHECK(std::is_sorted(s3.begin(), s3.end()));
  CHECK(enumerate_group(FullSymmetric{8}).size() == 40320);
  CHECK(enumerate_group(FullSymmetric{1}).size() == 1);
  CHECK_THROWS_AS(enumerate_group(FullSymmetric{9}), BudgetError);
  CHECK_THROWS_AS(enumerate_group(FullSymmetric{0}), InputError);
}

TEST_CASE("explicit groups") {
  const auto t = Permutation::from_cycles(3, {{0, 1}});
  const auto closure = generated_subgroup({t});
  CHECK(closure.size() == 2);
  CHECK(enumerate_group(ExplicitGroup{closure}).size() == 2);

  const auto c3 = generated_subgroup({Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK(c3.size() == 3);
  CHECK(generated_subgroup({t, Permutation::from_cycles(3, {{0, 1, 2}})}).size() == 6);
  CHECK(generated_subgroup({Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})}).size() == 4);

  CHECK_THROWS_AS(enumerate_group(ExplicitGroup{{t}}), InputError);  // no identity
  CHECK_THROWS_AS(enumerate_group(ExplicitGroup{{Permutation::identity(3), Permutation::from_cycles(3, {{0, 1, 2}})}}),
                  InputError);  // not closed
  CHECK_THROWS_AS(enumerate_group(ExplicitGroup{{Permutation::identity(3), t, t}}), InputError);
  CHECK_THROWS_AS(enumerate_group(ExplicitGroup{{Permutation::identity(3), Permutation::identity(2)}}), InputError);
  CHECK_THROWS_AS(enumerate_group(ExplicitGroup{}), InputError);
  CHECK(group_degree(ExplicitGroup{closure}) == 3);
  CHECK(group_degree(FullSymmetric{5}) == 5);
}
