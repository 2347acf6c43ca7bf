#include "hpineq/scalar/inequalities.hpp"

#include <array>
#include <cmath>

namespace hpineq::scalar {
namespace {

constexpr std::array kKinds{ConvexKind::kAbs, ConvexKind::kSquare, ConvexKind::kFourth,
                            ConvexKind::kExp, ConvexKind::kRelu,   ConvexKind::kSoftplus};

VectorTuple canonical_tuple(const VectorTuple& t) {
  if (t.empty()) return t;
  for (const auto& v : t) {
    if (v.size() != t.front().size()) throw InputError("vectors must have equal dimension");
    for (double x : v)
      if (!std::isfinite(x)) throw InputError("vector entries must be finite");
  }
  VectorTuple s = t;
  std::sort(s.begin(), s.end());
  return s;
}

double subset_norm(const VectorTuple& t, const std::vector<int>& idx, const Norm& norm) {
  Vector s(t.front().size(), 0.0);
  for (int i : idx) {
    const Vector& v = t[static_cast<std::size_t>(i)];
    for (std::size_t d = 0; d < s.size(); ++d) s[d] += v[d];
  }
  return norm(s);
}

double level_norm_sum(const VectorTuple& t, int size, const Norm& norm) {
  double total = 0.0;
  for_each_subset(static_cast<int>(t.size()), size,
                  [&](const std::vector<int>& idx) { total += subset_norm(t, idx, norm); });
  return total;
}

}  // namespace

std::string_view convex_name(ConvexKind k) {
  switch (k) {
    case ConvexKind::kAbs:
      return "abs";
    case ConvexKind::kSquare:
      return "square";
    case ConvexKind::kFourth:
      return "fourth";
    case ConvexKind::kExp:
      return "exp";
    case ConvexKind::kRelu:
      return "relu";
    case ConvexKind::kSoftplus:
      return "softplus";
  }
  return "?";
}

std::optional<ConvexKind> parse_convex(std::string_view name) {
  for (ConvexKind k : kKinds)
    if (convex_name(k) == name) return k;
  return std::nullopt;
}

std::span<const ConvexKind> all_convex_kinds() { return kKinds; }

double Norm::operator()(std::span<const double> v) const {
  if (!(p >= 1.0)) throw InputError("norm exponent must be >= 1");
  if (p == 2.0) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  }
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  double s = 0.0;
  for (double x : v) s += std::pow(std::abs(x), p);
  return std::pow(s, 1.0 / p);
}

ScalarCheckResult norm_hlawka(const Vector& a, const Vector& b, const Vector& c,
                              const Norm& norm) {
  const VectorTuple t = canonical_tuple({a, b, c});
  detail::Ledger<double> l;
  l.left(level_norm_sum(t, 1, norm));
  l.left(level_norm_sum(t, 3, norm));
  l.right(level_norm_sum(t, 2, norm));
  return l.finish();
}

ScalarCheckResult freudenthal_alternating(const VectorTuple& tuple, const Norm& norm) {
  detail::require_n(tuple.size(), 3, "freudenthal_alternating");
  const VectorTuple t = canonical_tuple(tuple);
  const int n = static_cast<int>(t.size());
  detail::Ledger<double> l;
  for (int j = 1; j <= n; ++j) {
    const double term = level_norm_sum(t, j, norm);
    if (j % 2 == 1) l.left(term);
    else l.right(term);
  }
  return l.finish();
}

ScalarCheckResult radu_check(const VectorTuple& tuple, int k, const Norm& norm) {
  detail::require_n(tuple.size(), 3, "radu_check");
  const VectorTuple t = canonical_tuple(tuple);
  const int n = static_cast<int>(t.size());
  if (k < 2 || k > n) throw InputError("radu_check needs 2 <= k <= n");
  detail::Ledger<double> l;
  l.left(static_cast<double>(binomial(n - 2, k - 1)) * level_norm_sum(t, 1, norm));
  l.left(static_cast<double>(binomial(n - 2, k - 2)) * level_norm_sum(t, n, norm));
  l.right(level_norm_sum(t, k, norm));
  return l.finish();
}

}  // namespace hpineq::scalar
