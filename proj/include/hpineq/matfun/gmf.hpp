#pragma once

#include <span>
#include <vector>

#include "hpineq/linalg/matrix.hpp"
#include "hpineq/matfun/characters.hpp"
#include "hpineq/matfun/permutation.hpp"
#include "hpineq/sums/tensor_sums.hpp"

namespace hpineq::matfun {

// d_chi^G(X) = sum_{sigma in G} chi(sigma) prod_i X[i][sigma(i)].
// Enumerates the group and its character values once; apply() is then
// O(|G| m) per matrix.
class GeneralizedMatrixFunction {
 public:
  GeneralizedMatrixFunction(GroupSpec group, CharacterSpec chi);

  int degree() const noexcept { return degree_; }
  std::size_t group_order() const noexcept { return elements_.size(); }
  const CharacterSpec& character() const noexcept { return chi_; }

  cplx operator()(const ComplexMatrix& x) const;

  struct Evaluation {
    cplx value;
    double magnitude;  // sum_sigma |chi(sigma) prod_i X[i][sigma(i)]|
  };
  Evaluation evaluate(const ComplexMatrix& x) const;

 private:
  int degree_ = 0;
  CharacterSpec chi_;
  std::vector<Permutation> elements_;
  std::vector<cplx> values_;
};

cplx generalized_matrix_function(const ComplexMatrix& x, const GroupSpec& g,
                                 const CharacterSpec& chi);

// LU with partial pivoting.
cplx determinant(const ComplexMatrix& x);

// Ryser inclusion-exclusion with Gray-code updates; m <= 12 (BudgetError).
cplx permanent_oracle(const ComplexMatrix& x);

// s_k = sum over k-subsets I of det(sum_{i in I} A_i).
double elementary_symmetric_det(std::span<const HermitianMatrix> mats, int k);

struct ScalarMargin {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs
  double scale = 1.0;   // max(1, sum of |weighted terms|)
  bool holds = true;    // margin >= -tolerance * scale
};

inline constexpr double kScalarCorollaryTolerance = 1e-10;

// The d_chi^G image of an operator family: every tensor-power term
// (sum_{i in I} A_i)^{⊗p} is replaced by d_chi^G(sum_{i in I} A_i) with the
// same coefficients. params.p is not used (the image corresponds to p = m).
// Inputs must be PSD with dimension equal to the group degree.
ScalarMargin scalar_inequality_check(sums::Family family, std::span<const HermitianMatrix> mats,
                                     const sums::TensorSumParams& params,
                                     const GeneralizedMatrixFunction& d,
                                     double tolerance = kScalarCorollaryTolerance);

ScalarMargin scalar_inequality_check(sums::Family family, std::span<const HermitianMatrix> mats,
                                     const sums::TensorSumParams& params, const GroupSpec& g,
                                     const CharacterSpec& chi,
                                     double tolerance = kScalarCorollaryTolerance);

}  // namespace hpineq::matfun
