#pragma once

// Scalar and normed-space inequalities: margins LHS - RHS of Hlawka-,
// Jensen- and Popoviciu-type inequalities. Point evaluators are templates on
// the number type so tests can run them in exact rational arithmetic; the
// double instantiation is the normal API.
//
// Inputs are put in canonical order (ascending values, lexicographic
// vectors) before evaluation, which makes every result exactly invariant
// under permutations of the inputs.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hpineq/combinatorics.hpp"
#include "hpineq/error.hpp"
#include "hpineq/scalar/convex.hpp"

namespace hpineq::scalar {

inline constexpr double kScalarTolerance = 1e-12;

template <class T>
struct CheckResult {
  T lhs{};
  T rhs{};
  T margin{};
  T scale{1};  // max(1, sum of |evaluated terms|)
  bool holds = true;
};

using ScalarCheckResult = CheckResult<double>;

namespace detail {

template <class T>
T abs_value(const T& x) {
  return x < T(0) ? T(-x) : x;
}

// Running LHS/RHS with the absolute mass used for the tolerance scale.
template <class T>
struct Ledger {
  T lhs{0};
  T rhs{0};
  T mass{0};

  void left(const T& term) {
    lhs += term;
    mass += abs_value(term);
  }
  void right(const T& term) {
    rhs += term;
    mass += abs_value(term);
  }
  CheckResult<T> finish() const {
    CheckResult<T> r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = lhs - rhs;
    r.scale = mass < T(1) ? T(1) : mass;
    r.holds = !(r.margin < T(-kScalarTolerance) * r.scale);
    return r;
  }
};

template <class T>
std::vector<T> canonical(std::span<const T> xs) {
  std::vector<T> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  return v;
}

// sum over |I| = size of f(mean_I), subsets in lexicographic order.
template <class T>
T level_sum(const ConvexFunction& f, const std::vector<T>& xs, int size) {
  T total{0};
  const T denom(size);
  for_each_subset(static_cast<int>(xs.size()), size, [&](const std::vector<int>& idx) {
    T s{0};
    for (int i : idx) s += xs[static_cast<std::size_t>(i)];
    total += f(T(s / denom));
  });
  return total;
}

inline void require_n(std::size_t n, std::size_t min, const char* what) {
  if (n < min) {
    throw InputError(std::string(what) + " needs at least " + std::to_string(min) + " points");
  }
}

}  // namespace detail

// f(a+b+c) + f(a) + f(b) + f(c) - f(a+b) - f(a+c) - f(b+c). An evaluator:
// convexity alone does not make this nonnegative.
template <class T = double>
CheckResult<T> functional_hlawka(const ConvexFunction& f, T a, T b, T c) {
  std::vector<T> v{a, b, c};
  std::sort(v.begin(), v.end());
  detail::Ledger<T> l;
  l.left(f(T(v[0] + v[1] + v[2])));
  for (const T& x : v) l.left(f(x));
  l.right(f(T(v[0] + v[1])));
  l.right(f(T(v[0] + v[2])));
  l.right(f(T(v[1] + v[2])));
  return l.finish();
}

// sum f(x_i) - k f(mean)
template <class T = double>
CheckResult<T> jensen_check(const ConvexFunction& f, std::span<const T> xs) {
  detail::require_n(xs.size(), 1, "jensen_check");
  const std::vector<T> v = detail::canonical(xs);
  const int k = static_cast<int>(v.size());
  detail::Ledger<T> l;
  l.left(detail::level_sum(f, v, 1));
  l.right(T(k) * detail::level_sum(f, v, k));
  return l.finish();
}

// sum_{i} f(x_i) + (n/(n-2)) f(mean) - (2/(n-2)) sum_{i<j} f((x_i+x_j)/2)
template <class T = double>
CheckResult<T> vasc_check(const ConvexFunction& f, std::span<const T> xs) {
  detail::require_n(xs.size(), 3, "vasc_check");
  const std::vector<T> v = detail::canonical(xs);
  const int n = static_cast<int>(v.size());
  detail::Ledger<T> l;
  l.left(detail::level_sum(f, v, 1));
  l.left(T(n) / T(n - 2) * detail::level_sum(f, v, n));
  l.right(T(2) / T(n - 2) * detail::level_sum(f, v, 2));
  return l.finish();
}

// f(x1) + f(x2) + f(x3) + 3 f(mean) - 2 [f(m12) + f(m13) + f(m23)]
template <class T = double>
CheckResult<T> popoviciu_check(const ConvexFunction& f, T x1, T x2, T x3) {
  const std::vector<T> v0{x1, x2, x3};
  const std::vector<T> v = detail::canonical(std::span<const T>(v0));
  detail::Ledger<T> l;
  l.left(detail::level_sum(f, v, 1));
  l.right(T(2) * detail::level_sum(f, v, 2));
  l.left(T(3) * detail::level_sum(f, v, 3));
  return l.finish();
}

// C(n-2,m-1) sum f(x_i) + n C(n-2,m-2) f(mean) - m sum_{|I|=m} f(mean_I)
template <class T = double>
CheckResult<T> pcz_check(const ConvexFunction& f, std::span<const T> xs, int m) {
  detail::require_n(xs.size(), 3, "pcz_check");
  const std::vector<T> v = detail::canonical(xs);
  const int n = static_cast<int>(v.size());
  if (m < 2 || m >= n) throw InputError("pcz_check needs 2 <= m < n");
  detail::Ledger<T> l;
  l.left(T(binomial(n - 2, m - 1)) * detail::level_sum(f, v, 1));
  l.left(T(n) * T(binomial(n - 2, m - 2)) * detail::level_sum(f, v, n));
  l.right(T(m) * detail::level_sum(f, v, m));
  return l.finish();
}

// Odd subset sizes j weighted by j on the left, even sizes on the right:
//   sum_{j odd} j sum_{|I|=j} f(mean_I) - sum_{j even} j sum_{|I|=j} f(mean_I)
// Reduces to popoviciu_check for n = 3. Known to fail for n = 4.
template <class T = double>
CheckResult<T> conjecture_hlawka_pop_eval(const ConvexFunction& f, std::span<const T> xs) {
  detail::require_n(xs.size(), 3, "conjecture_hlawka_pop_eval");
  const std::vector<T> v = detail::canonical(xs);
  const int n = static_cast<int>(v.size());
  detail::Ledger<T> l;
  for (int j = 1; j <= n; ++j) {
    const T term = T(j) * detail::level_sum(f, v, j);
    if (j % 2 == 1) l.left(term);
    else l.right(term);
  }
  return l.finish();
}

// Scalar analogue of the three-level tensor inequality, with S_j replaced
// by j * sum_{|I|=j} f(mean_I):
//   (m-ell)/C(n,k) L_k + (ell-k)/C(n,m) L_m - (m-k)/C(n,ell) L_ell,
// L_j = sum_{|I|=j} f(mean_I). It holds only for some (k, ell, m), so this is
// an evaluator without an asserted direction.
template <class T = double>
CheckResult<T> convex_levels_eval(const ConvexFunction& f, std::span<const T> xs, int k, int ell,
                                  int m) {
  detail::require_n(xs.size(), 3, "convex_levels_eval");
  const std::vector<T> v = detail::canonical(xs);
  const int n = static_cast<int>(v.size());
  if (!(1 <= k && k < ell && ell < m && m <= n)) {
    throw InputError("convex_levels_eval needs 1 <= k < ell < m <= n");
  }
  detail::Ledger<T> l;
  l.left(T(m - ell) / T(binomial(n, k)) * detail::level_sum(f, v, k));
  l.left(T(ell - k) / T(binomial(n, m)) * detail::level_sum(f, v, m));
  l.right(T(m - k) / T(binomial(n, ell)) * detail::level_sum(f, v, ell));
  return l.finish();
}

// ---- normed-space inequalities (double precision) ----

using Vector = std::vector<double>;
using VectorTuple = std::vector<Vector>;

// p-norm; p = 2 is Euclidean. p must be >= 1 (a norm).
struct Norm {
  double p = 2.0;
  double operator()(std::span<const double> v) const;
};

// ||a+b+c|| + ||a|| + ||b|| + ||c|| - ||a+b|| - ||a+c|| - ||b+c||
ScalarCheckResult norm_hlawka(const Vector& a, const Vector& b, const Vector& c,
                              const Norm& norm = {});

// sum_j (-1)^{j-1} sum_{|I|=j} ||sum_I a_i||; odd j form the LHS.
ScalarCheckResult freudenthal_alternating(const VectorTuple& tuple, const Norm& norm = {});

// C(n-2,k-1) sum ||a_i|| + C(n-2,k-2) ||sum a_i|| - sum_{|I|=k} ||sum_I a_i||
ScalarCheckResult radu_check(const VectorTuple& tuple, int k, const Norm& norm = {});

}  // namespace hpineq::scalar
