#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hpineq/error.hpp"

namespace hpineq {

// C(n, k) in exact integer arithmetic; 0 outside 0 <= k <= n.
inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    if (r > INT64_MAX / (n - k + i)) throw BudgetError("binomial coefficient overflows int64");
    r = r * (n - k + i) / i;
  }
  return r;
}

// Calls fn(const std::vector<int>&) for every k-subset of {0..n-1} in
// lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace hpineq
