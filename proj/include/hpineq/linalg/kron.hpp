#pragma once

#include <cstddef>

#include "hpineq/linalg/matrix.hpp"

namespace hpineq {

// Kronecker product: entry (i*dimB + k, j*dimB + l) = a(i,j) * b(k,l).
// Throws BudgetError when dimA*dimB exceeds budget.max_tensor_dim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, const Budget& budget = {});
HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b,
                     const Budget& budget = {});

// dim^p, or BudgetError if it exceeds the budget. p must be >= 1.
std::size_t checked_tensor_dim(std::size_t dim, int p, const Budget& budget = {});

// p-fold left-associated Kronecker power ((a ⊗ a) ⊗ a) ⊗ ...
HermitianMatrix tensor_power(const HermitianMatrix& a, int p, const Budget& budget = {});

}  // namespace hpineq
