#include "hpineq/matfun/gmf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hpineq/combinatorics.hpp"
#include "hpineq/error.hpp"

namespace hpineq::matfun {

GeneralizedMatrixFunction::GeneralizedMatrixFunction(GroupSpec group, CharacterSpec chi)
    : degree_(group_degree(group)), chi_(std::move(chi)) {
  elements_ = enumerate_group(group);
  values_ = character_values(group, elements_, chi_);
}

GeneralizedMatrixFunction::Evaluation GeneralizedMatrixFunction::evaluate(
    const ComplexMatrix& x) const {
  if (static_cast<int>(x.dim()) != degree_) {
    throw InputError("generalized matrix function: matrix dim " + std::to_string(x.dim()) +
                     " does not match group degree " + std::to_string(degree_));
  }
  Evaluation out{0.0, 0.0};
  for (std::size_t s = 0; s < elements_.size(); ++s) {
    if (values_[s] == cplx(0.0, 0.0)) continue;
    const Permutation& sigma = elements_[s];
    cplx prod = 1.0;
    for (int i = 0; i < degree_; ++i) prod *= x(static_cast<std::size_t>(i), static_cast<std::size_t>(sigma(i)));
    const cplx term = values_[s] * prod;
    out.value += term;
    out.magnitude += std::abs(term);
  }
  return out;
}

cplx GeneralizedMatrixFunction::operator()(const ComplexMatrix& x) const {
  return evaluate(x).value;
}

cplx generalized_matrix_function(const ComplexMatrix& x, const GroupSpec& g,
                                 const CharacterSpec& chi) {
  return GeneralizedMatrixFunction(g, chi)(x);
}

cplx determinant(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  std::vector<cplx> a(x.entries().begin(), x.entries().end());
  cplx det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == cplx(0.0, 0.0)) return 0.0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
      det = -det;
    }
    const cplx d = a[c * n + c];
    det *= d;
    for (std::size_t r = c + 1; r < n; ++r) {
      const cplx f = a[r * n + c] / d;
      if (f == cplx(0.0, 0.0)) continue;
      for (std::size_t j = c + 1; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
    }
  }
  return det;
}

cplx permanent_oracle(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  if (n > 12) throw BudgetError("permanent_oracle supports m <= 12");
  // perm(X) = (-1)^n sum_{S ⊆ cols} (-1)^{|S|} prod_i sum_{j in S} x_ij,
  // walking the subsets in Gray-code order.
  std::vector<cplx> row_sum(n, 0.0);
  cplx total = 0.0;
  std::uint32_t gray = 0;
  const std::uint32_t count = 1u << n;
  for (std::uint32_t k = 1; k < count; ++k) {
    const std::uint32_t next = k ^ (k >> 1);
    const std::uint32_t changed = next ^ gray;
    const int col = __builtin_ctz(changed);
    const double dir = (next & changed) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) row_sum[i] += dir * x(i, static_cast<std::size_t>(col));
    gray = next;
    cplx prod = 1.0;
    for (const cplx& s : row_sum) prod *= s;
    const int bits = __builtin_popcount(gray);
    total += ((n - static_cast<std::size_t>(bits)) % 2 == 0) ? prod : -prod;
  }
  return total;
}

double elementary_symmetric_det(std::span<const HermitianMatrix> mats, int k) {
  const int n = static_cast<int>(mats.size());
  if (n == 0) throw InputError("elementary_symmetric_det: no matrices");
  if (k < 1 || k > n) throw InputError("elementary_symmetric_det needs 1 <= k <= n");
  for (const auto& a : mats)
    if (a.dim() != mats.front().dim()) throw InputError("elementary_symmetric_det: unequal dims");
  double s = 0.0;
  for_each_subset(n, k, [&](const std::vector<int>& subset) {
    HermitianMatrix sum = mats[static_cast<std::size_t>(subset.front())];
    for (std::size_t i = 1; i < subset.size(); ++i) sum = sum + mats[static_cast<std::size_t>(subset[i])];
    s += determinant(sum.matrix()).real();
  });
  return s;
}

ScalarMargin scalar_inequality_check(sums::Family family, std::span<const HermitianMatrix> mats,
                                     const sums::TensorSumParams& params,
                                     const GeneralizedMatrixFunction& d, double tolerance) {
  sums::validate_psd_inputs(mats);
  if (static_cast<int>(mats.front().dim()) != d.degree()) {
    throw InputError("scalar_inequality_check: matrices are " + std::to_string(mats.front().dim()) +
                     "x" + std::to_string(mats.front().dim()) + " but the group has degree " +
                     std::to_string(d.degree()));
  }
  sums::expression_for(family, static_cast<int>(mats.size()), params);
  const sums::TensorExpression expr = sums::expression_for(
      family, static_cast<int>(mats.size()), sums::canonical_params(family, params));
  const std::vector<HermitianMatrix> ordered = sums::canonical_order(family, mats, params);

  ScalarMargin r;
  double magnitude = 0.0;
  const double den = static_cast<double>(expr.denominator);
  for (const sums::SubsetTerm& t : expr.terms) {
    HermitianMatrix s = ordered[static_cast<std::size_t>(t.subset.front())];
    for (std::size_t i = 1; i < t.subset.size(); ++i) s = s + ordered[static_cast<std::size_t>(t.subset[i])];
    const double value = d(s.matrix()).real();
    const double w = static_cast<double>(std::abs(t.numerator)) / den;
    if (t.numerator > 0) r.lhs += w * value;
    else r.rhs += w * value;
    magnitude += std::abs(w * value);
  }
  r.margin = r.lhs - r.rhs;
  r.scale = std::max(1.0, magnitude);
  r.holds = r.margin >= -tolerance * r.scale;
  return r;
}

ScalarMargin scalar_inequality_check(sums::Family family, std::span<const HermitianMatrix> mats,
                                     const sums::TensorSumParams& params, const GroupSpec& g,
                                     const CharacterSpec& chi, double tolerance) {
  return scalar_inequality_check(family, mats, params, GeneralizedMatrixFunction(g, chi),
                                 tolerance);
}

}  // namespace hpineq::matfun
