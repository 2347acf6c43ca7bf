#include "hpineq/sums/tensor_sums.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

#include "hpineq/combinatorics.hpp"
#include "hpineq/error.hpp"
#include "hpineq/linalg/kron.hpp"
#include "hpineq/linalg/spectrum.hpp"

namespace hpineq::sums {
namespace {

constexpr std::array kFamilies{Family::kHlawka3,  Family::kSupermod,   Family::kAlternating,
                               Family::kSuperadd, Family::kPopPairs,   Family::kPopSubsets,
                               Family::kPopLevels, Family::kZhang};

// Accumulates subset -> coefficient before canonical ordering.
class ExpressionBuilder {
 public:
  explicit ExpressionBuilder(int n) : n_(n) {}

  void add(const std::vector<int>& subset, std::int64_t coef) { coef_[subset] += coef; }
  void add_level(int size, std::int64_t coef) {
    for_each_subset(n_, size, [&](const std::vector<int>& s) { add(s, coef); });
  }

  TensorExpression finish(std::int64_t denominator) && {
    TensorExpression expr;
    expr.n = n_;
    expr.denominator = denominator;
    for (auto& [subset, c] : coef_)
      if (c != 0) expr.terms.push_back({subset, c});
    std::stable_sort(expr.terms.begin(), expr.terms.end(),
                     [](const SubsetTerm& a, const SubsetTerm& b) {
                       if (a.subset.size() != b.subset.size())
                         return a.subset.size() < b.subset.size();
                       return a.subset < b.subset;
                     });
    return expr;
  }

 private:
  int n_;
  std::map<std::vector<int>, std::int64_t> coef_;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

int require_param(const std::optional<int>& v, const char* name, Family f) {
  if (!v) {
    throw InputError(std::string(family_name(f)) + " requires parameter " + name);
  }
  return *v;
}

bool entries_less(const HermitianMatrix& a, const HermitianMatrix& b) {
  const auto ea = a.entries();
  const auto eb = b.entries();
  return std::lexicographical_compare(
      ea.begin(), ea.end(), eb.begin(), eb.end(), [](const cplx& x, const cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
      });
}

void sort_range(std::vector<HermitianMatrix>& v, std::size_t first, std::size_t last) {
  std::stable_sort(v.begin() + static_cast<std::ptrdiff_t>(first),
                   v.begin() + static_cast<std::ptrdiff_t>(last), entries_less);
}

void check_inputs(std::span<const HermitianMatrix> mats) {
  require(!mats.empty(), "no input matrices");
  for (const auto& a : mats) {
    require(a.dim() == mats.front().dim(), "input matrices must have equal dimensions");
  }
}

// Binary-counter pairwise summation: partial sums of equal "level" are merged
// as soon as two exist, so the result depends only on term order.
class TreeSum {
 public:
  void push(HermitianMatrix leaf) {
    int level = 0;
    while (!stack_.empty() && stack_.back().second == level) {
      leaf = stack_.back().first + leaf;
      stack_.pop_back();
      ++level;
    }
    stack_.emplace_back(std::move(leaf), level);
  }

  HermitianMatrix finish(std::size_t dim) && {
    if (stack_.empty()) return HermitianMatrix::zeros(dim);
    HermitianMatrix acc = std::move(stack_.back().first);
    stack_.pop_back();
    while (!stack_.empty()) {
      acc = stack_.back().first + acc;
      stack_.pop_back();
    }
    return acc;
  }

 private:
  std::vector<std::pair<HermitianMatrix, int>> stack_;
};

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kHlawka3:
      return "hlawka3";
    case Family::kSupermod:
      return "supermod";
    case Family::kAlternating:
      return "alternating";
    case Family::kSuperadd:
      return "superadd";
    case Family::kPopPairs:
      return "pop-pairs";
    case Family::kPopSubsets:
      return "pop-subsets";
    case Family::kPopLevels:
      return "pop-levels";
    case Family::kZhang:
      return "zhang";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::span<const Family> all_families() { return kFamilies; }

std::optional<int> fixed_arity(Family f) {
  switch (f) {
    case Family::kHlawka3:
    case Family::kSupermod:
      return 3;
    case Family::kSuperadd:
      return 2;
    default:
      return std::nullopt;
  }
}

TensorExpression expression_for(Family f, int n, const TensorSumParams& params) {
  if (auto a = fixed_arity(f)) {
    require(n == *a, std::string(family_name(f)) + " takes exactly " + std::to_string(*a) +
                         " matrices, got " + std::to_string(n));
  } else {
    require(n >= 3, std::string(family_name(f)) + " needs n >= 3, got " + std::to_string(n));
  }
  require(n <= 30, "at most 30 input matrices are supported");
  require(params.p >= 1, "tensor power p must be >= 1");

  ExpressionBuilder b(n);
  std::int64_t denominator = 1;
  switch (f) {
    case Family::kHlawka3:
    case Family::kAlternating:
      for (int j = 1; j <= n; ++j) b.add_level(j, (n - j) % 2 == 0 ? 1 : -1);
      break;
    case Family::kSupermod:
      b.add({0, 1, 2}, 1);
      b.add({0}, 1);
      b.add({0, 1}, -1);
      b.add({0, 2}, -1);
      break;
    case Family::kSuperadd:
      b.add({0, 1}, 1);
      b.add({0}, -1);
      b.add({1}, -1);
      break;
    case Family::kPopPairs:
      b.add_level(1, n - 2);
      b.add_level(n, 1);
      b.add_level(2, -1);
      break;
    case Family::kPopSubsets: {
      const int m = require_param(params.m, "m", f);
      require(2 <= m && m < n, "pop-subsets needs 2 <= m < n");
      b.add_level(1, binomial(n - 2, m - 1));
      b.add_level(n, binomial(n - 2, m - 2));
      b.add_level(m, -1);
      break;
    }
    case Family::kPopLevels: {
      const int k = require_param(params.k, "k", f);
      const int ell = require_param(params.ell, "ell", f);
      const int m = require_param(params.m, "m", f);
      require(1 <= k && k < ell && ell < m && m <= n, "pop-levels needs 1 <= k < ell < m <= n");
      // (m-ell)/(k C(n,k)) S_k + (ell-k)/(m C(n,m)) S_m - (m-k)/(ell C(n,ell)) S_ell
      const std::int64_t dk = k * binomial(n, k);
      const std::int64_t dm = m * binomial(n, m);
      const std::int64_t dl = ell * binomial(n, ell);
      denominator = std::lcm(std::lcm(dk, dm), dl);
      b.add_level(k, (m - ell) * (denominator / dk));
      b.add_level(m, (ell - k) * (denominator / dm));
      b.add_level(ell, -(m - k) * (denominator / dl));
      break;
    }
    case Family::kZhang: {
      const int i = require_param(params.index, "index", f);
      require(0 <= i && i < n, "zhang index must be in [0, n)");
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 0);
      b.add(all, 1);
      b.add({i}, n - 2);
      for (int j = 0; j < n; ++j)
        if (j != i) b.add({std::min(i, j), std::max(i, j)}, -1);
      break;
    }
  }
  return std::move(b).finish(denominator);
}

std::vector<HermitianMatrix> canonical_order(Family f, std::span<const HermitianMatrix> mats,
                                             const TensorSumParams& params) {
  std::vector<HermitianMatrix> v(mats.begin(), mats.end());
  switch (f) {
    case Family::kSupermod:
      if (v.size() == 3) sort_range(v, 1, 3);
      break;
    case Family::kZhang:
      if (params.index && *params.index >= 0 &&
          static_cast<std::size_t>(*params.index) < v.size()) {
        // The distinguished matrix moves to slot 0; the rest are sorted.
        const auto idx = static_cast<std::size_t>(*params.index);
        std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(idx),
                    v.begin() + static_cast<std::ptrdiff_t>(idx) + 1);
        sort_range(v, 1, v.size());
      }
      break;
    default:
      sort_range(v, 0, v.size());
      break;
  }
  return v;
}

TensorSumParams canonical_params(Family f, const TensorSumParams& params) {
  TensorSumParams out = params;
  if (f == Family::kZhang) out.index = 0;
  return out;
}

HermitianMatrix evaluate(const TensorExpression& expr, std::span<const HermitianMatrix> mats,
                         int p, const Budget& budget) {
  check_inputs(mats);
  require(static_cast<int>(mats.size()) == expr.n, "expression arity does not match inputs");
  const std::size_t out_dim = checked_tensor_dim(mats.front().dim(), p, budget);
  const double inv_den = 1.0 / static_cast<double>(expr.denominator);

  TreeSum sum;
  for (const SubsetTerm& t : expr.terms) {
    HermitianMatrix s = mats[static_cast<std::size_t>(t.subset.front())];
    for (std::size_t i = 1; i < t.subset.size(); ++i)
      s = s + mats[static_cast<std::size_t>(t.subset[i])];
    const double w = expr.denominator == 1 ? static_cast<double>(t.numerator)
                                           : static_cast<double>(t.numerator) * inv_den;
    sum.push(w * tensor_power(s, p, budget));
  }
  return std::move(sum).finish(out_dim);
}

bool validate_psd_inputs(std::span<const HermitianMatrix> mats) {
  check_inputs(mats);
  bool singular = false;
  for (const auto& a : mats) {
    const double lam = min_eigenvalue(a);
    const double thr = 1e-12 * std::max(1.0, a.infinity_norm());
    if (lam < -thr) {
      throw InputError("input matrix is not positive semidefinite (min eigenvalue " +
                       std::to_string(lam) + ")");
    }
    if (lam <= thr) singular = true;
  }
  return singular;
}

Difference build_difference(Family f, std::span<const HermitianMatrix> mats,
                            const TensorSumParams& params, const Budget& budget) {
  check_inputs(mats);
  expression_for(f, static_cast<int>(mats.size()), params);
  const TensorExpression expr =
      expression_for(f, static_cast<int>(mats.size()), canonical_params(f, params));
  checked_tensor_dim(mats.front().dim(), params.p, budget);

  Difference out;
  out.inputs_psd_only = validate_psd_inputs(mats);
  const std::vector<HermitianMatrix> ordered = canonical_order(f, mats, params);
  HermitianMatrix total = ordered.front();
  for (std::size_t i = 1; i < ordered.size(); ++i) total = total + ordered[i];
  out.input_scale = total.infinity_norm();
  out.matrix = evaluate(expr, ordered, params.p, budget);
  return out;
}

HermitianMatrix symmetric_tensor_sum(std::span<const HermitianMatrix> mats, int k, int p,
                                     const Budget& budget) {
  check_inputs(mats);
  const int n = static_cast<int>(mats.size());
  require(1 <= k && k <= n, "symmetric_tensor_sum needs 1 <= k <= n");
  ExpressionBuilder b(n);
  b.add_level(k, 1);
  const TensorExpression expr = std::move(b).finish(1);
  std::vector<HermitianMatrix> ordered(mats.begin(), mats.end());
  sort_range(ordered, 0, ordered.size());
  return evaluate(expr, ordered, p, budget);
}

namespace {

HermitianMatrix run(Family f, std::span<const HermitianMatrix> mats, TensorSumParams params,
                    const Budget& budget) {
  return build_difference(f, mats, params, budget).matrix;
}

}  // namespace

HermitianMatrix hlawka3_difference(const HermitianMatrix& a, const HermitianMatrix& b,
                                   const HermitianMatrix& c, int p, const Budget& budget) {
  const std::array mats{a, b, c};
  return run(Family::kHlawka3, mats, {.p = p}, budget);
}

HermitianMatrix supermodularity_difference(const HermitianMatrix& a, const HermitianMatrix& b,
                                           const HermitianMatrix& c, int p,
                                           const Budget& budget) {
  const std::array mats{a, b, c};
  return run(Family::kSupermod, mats, {.p = p}, budget);
}

HermitianMatrix superadditivity_difference(const HermitianMatrix& a, const HermitianMatrix& b,
                                           int p, const Budget& budget) {
  const std::array mats{a, b};
  return run(Family::kSuperadd, mats, {.p = p}, budget);
}

HermitianMatrix alternating_difference(std::span<const HermitianMatrix> mats, int p,
                                       const Budget& budget) {
  return run(Family::kAlternating, mats, {.p = p}, budget);
}

HermitianMatrix pop_pairs_difference(std::span<const HermitianMatrix> mats, int p,
                                     const Budget& budget) {
  return run(Family::kPopPairs, mats, {.p = p}, budget);
}

HermitianMatrix pop_subsets_difference(std::span<const HermitianMatrix> mats, int m, int p,
                                       const Budget& budget) {
  return run(Family::kPopSubsets, mats, {.p = p, .m = m}, budget);
}

HermitianMatrix pop_levels_difference(std::span<const HermitianMatrix> mats, int k, int ell,
                                      int m, int p, const Budget& budget) {
  return run(Family::kPopLevels, mats, {.p = p, .k = k, .ell = ell, .m = m}, budget);
}

HermitianMatrix zhang_difference(std::span<const HermitianMatrix> mats, int index, int p,
                                 const Budget& budget) {
  return run(Family::kZhang, mats, {.p = p, .index = index}, budget);
}

}  // namespace hpineq::sums
