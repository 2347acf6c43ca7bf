#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hpineq/linalg/matrix.hpp"

namespace hpineq::sums {

// Operator inequality families. Each one is an inequality LHS >= RHS over
// tensor powers of subset sums; the builders return LHS - RHS.
enum class Family {
  kHlawka3,      // (A+B+C)^p + A^p + B^p + C^p >= (A+B)^p + (A+C)^p + (B+C)^p
  kSupermod,     // (A+B+C)^p + A^p >= (A+B)^p + (A+C)^p
  kAlternating,  // S_n + S_{n-2} + ... >= S_{n-1} + S_{n-3} + ...
  kSuperadd,     // (A+B)^p >= A^p + B^p
  kPopPairs,     // (n-2) sum A_i^p + (sum A_i)^p >= sum_{i<j} (A_i+A_j)^p
  kPopSubsets,   // C(n-2,m-1) sum A_i^p + C(n-2,m-2) (sum A_i)^p >= S_m
  kPopLevels,    // weighted S_k, S_m against S_ell, 1 <= k < ell < m <= n
  kZhang,        // (sum A)^p + (n-2) A_i^p >= sum_{j != i} (A_i+A_j)^p
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
std::span<const Family> all_families();

struct TensorSumParams {
  int p = 1;
  std::optional<int> k{};
  std::optional<int> ell{};
  std::optional<int> m{};
  std::optional<int> index{};  // distinguished matrix for kZhang (0-based)
};

// One summand: (numerator / denominator) * (sum_{i in subset} A_i)^{⊗p}.
struct SubsetTerm {
  std::vector<int> subset;  // ascending, 0-based
  std::int64_t numerator = 0;
};

// LHS - RHS as an exact rational combination of subset powers. Terms are in
// canonical order (subset size, then lexicographic), duplicates merged and
// zero coefficients dropped.
struct TensorExpression {
  int n = 0;
  std::int64_t denominator = 1;
  std::vector<SubsetTerm> terms;
};

// Validates (family, n, params) and returns the expression; throws
// InputError on out-of-range parameters.
TensorExpression expression_for(Family f, int n, const TensorSumParams& params);

// Number of input matrices the family takes, or nullopt when any n >= 3
// is accepted.
std::optional<int> fixed_arity(Family f);

// Input order that makes the result independent of the caller's ordering:
// exchangeable inputs are sorted by their entries (lexicographically over
// (re, im) in row-major order); a distinguished input goes to slot 0.
std::vector<HermitianMatrix> canonical_order(Family f, std::span<const HermitianMatrix> mats,
                                             const TensorSumParams& params);
// Parameters matching canonical_order (the zhang index becomes 0).
TensorSumParams canonical_params(Family f, const TensorSumParams& params);

// Evaluates an expression over already-ordered inputs. Per-subset tensor
// powers are formed one at a time and combined by pairwise (tree) summation
// in term order.
HermitianMatrix evaluate(const TensorExpression& expr, std::span<const HermitianMatrix> mats,
                         int p, const Budget& budget = {});

struct Difference {
  HermitianMatrix matrix;
  // Some input was singular (PSD but not PD); the inequalities still hold by
  // continuity, but the caller may want to know.
  bool inputs_psd_only = false;
  // ||A_1 + ... + A_n||_inf, the natural magnitude of the inputs.
  double input_scale = 0.0;
};

// Checks equal dimensions and positive semidefiniteness (InputError
// otherwise). Returns true when some input is singular.
bool validate_psd_inputs(std::span<const HermitianMatrix> mats);

// Full pipeline: validate inputs (equal dims, PSD), canonicalize, build,
// evaluate. Indefinite inputs are rejected with InputError.
Difference build_difference(Family f, std::span<const HermitianMatrix> mats,
                            const TensorSumParams& params, const Budget& budget = {});

// Sum over all k-subsets I of (sum_{i in I} A_i)^{⊗p}.
HermitianMatrix symmetric_tensor_sum(std::span<const HermitianMatrix> mats, int k, int p,
                                     const Budget& budget = {});

HermitianMatrix hlawka3_difference(const HermitianMatrix& a, const HermitianMatrix& b,
                                   const HermitianMatrix& c, int p, const Budget& budget = {});
HermitianMatrix supermodularity_difference(const HermitianMatrix& a, const HermitianMatrix& b,
                                           const HermitianMatrix& c, int p,
                                           const Budget& budget = {});
HermitianMatrix superadditivity_difference(const HermitianMatrix& a, const HermitianMatrix& b,
                                           int p, const Budget& budget = {});
HermitianMatrix alternating_difference(std::span<const HermitianMatrix> mats, int p,
                                       const Budget& budget = {});
HermitianMatrix pop_pairs_difference(std::span<const HermitianMatrix> mats, int p,
                                     const Budget& budget = {});
HermitianMatrix pop_subsets_difference(std::span<const HermitianMatrix> mats, int m, int p,
                                       const Budget& budget = {});
HermitianMatrix pop_levels_difference(std::span<const HermitianMatrix> mats, int k, int ell,
                                      int m, int p, const Budget& budget = {});
HermitianMatrix zhang_difference(std::span<const HermitianMatrix> mats, int index, int p,
                                 const Budget& budget = {});

}  // namespace hpineq::sums
