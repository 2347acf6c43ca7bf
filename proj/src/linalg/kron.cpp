#include "hpineq/linalg/kron.hpp"

#include <string>
#include <vector>

#include "hpineq/error.hpp"
#include "hpineq/simd/kernels.hpp"

namespace hpineq {
namespace {

std::vector<cplx> kron_entries(const ComplexMatrix& a, const ComplexMatrix& b,
                               const Budget& budget) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (da == 0 || db == 0) throw InputError("kron: empty matrix");
  if (da > budget.max_tensor_dim / db) {
    throw BudgetError("kron: dimension " + std::to_string(da) + "*" + std::to_string(db) +
                      " exceeds max tensor dimension " +
                      std::to_string(budget.max_tensor_dim));
  }
  const std::size_t d = da * db;
  std::vector<cplx> out(d * d);
  const auto& k = simd::active();
  // Output row i*db + kk is the outer product of a's row i with b's row kk.
  for (std::size_t i = 0; i < da; ++i) {
    const cplx* arow = a.row(i).data();
    for (std::size_t kk = 0; kk < db; ++kk) {
      k.outer_row(arow, da, b.row(kk).data(), db, out.data() + (i * db + kk) * d);
    }
  }
  return out;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, const Budget& budget) {
  const std::size_t d = a.dim() * b.dim();
  try {
    return ComplexMatrix(d, kron_entries(a, b, budget));
  } catch (const InputError&) {
    throw InputError("kron: product overflowed to a non-finite value");
  }
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b, const Budget& budget) {
  return HermitianMatrix::symmetrize(kron(a.matrix(), b.matrix(), budget));
}

std::size_t checked_tensor_dim(std::size_t dim, int p, const Budget& budget) {
  if (p < 1) throw InputError("tensor power p must be >= 1, got " + std::to_string(p));
  if (dim == 0) throw InputError("tensor power of an empty matrix");
  std::size_t d = dim;
  for (int t = 1; t < p; ++t) {
    if (d > budget.max_tensor_dim / dim) {
      throw BudgetError("tensor power: " + std::to_string(dim) + "^" + std::to_string(p) +
                        " exceeds max tensor dimension " +
                        std::to_string(budget.max_tensor_dim));
    }
    d *= dim;
  }
  if (d > budget.max_tensor_dim) {
    throw BudgetError("tensor power: dimension " + std::to_string(d) +
                      " exceeds max tensor dimension " +
                      std::to_string(budget.max_tensor_dim));
  }
  return d;
}

HermitianMatrix tensor_power(const HermitianMatrix& a, int p, const Budget& budget) {
  checked_tensor_dim(a.dim(), p, budget);
  HermitianMatrix acc = a;
  for (int t = 1; t < p; ++t) acc = kron(acc, a, budget);
  return acc;
}

}  // namespace hpineq
