#include "hpineq/linalg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hpineq/error.hpp"
#include "hpineq/simd/kernels.hpp"

namespace hpineq {
namespace {

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double* as_doubles_mut(std::vector<cplx>& v) { return reinterpret_cast<double*>(v.data()); }

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw InputError(std::string(op) + ": dimension mismatch (" + std::to_string(a) +
                     " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw InputError("matrix dimension must be positive");
  if (entries_.size() != dim_ * dim_) {
    throw InputError("matrix of dim " + std::to_string(dim_) + " needs " +
                     std::to_string(dim_ * dim_) + " entries, got " +
                     std::to_string(entries_.size()));
  }
  if (!std::all_of(entries_.begin(), entries_.end(), is_finite)) {
    throw InputError("matrix entries must be finite");
  }
}

ComplexMatrix ComplexMatrix::zeros(std::size_t dim) {
  if (dim == 0) throw InputError("matrix dimension must be positive");
  return ComplexMatrix(Unchecked{}, dim, std::vector<cplx>(dim * dim));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  if (dim == 0) throw InputError("matrix dimension must be positive");
  std::vector<cplx> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return ComplexMatrix(Unchecked{}, dim, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  const std::size_t n = diag.size();
  std::vector<cplx> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t n = rows.size();
  std::vector<cplx> e;
  e.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw InputError("from_rows: matrix must be square");
    e.insert(e.end(), r.begin(), r.end());
  }
  return ComplexMatrix(n, std::move(e));
}

double ComplexMatrix::max_abs_entry() const {
  double m = 0.0;
  for (const cplx& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::infinity_norm() const {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (const cplx& z : row(i)) s += std::abs(z);
    best = std::max(best, s);
  }
  return best;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  std::vector<cplx> e(entries_.size());
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) e[j * dim_ + i] = std::conj(entries_[i * dim_ + j]);
  return ComplexMatrix(Unchecked{}, dim_, std::move(e));
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix addition");
  std::vector<cplx> e = a.entries_;
  simd::active().axpy(1.0, as_doubles(b.entries()), as_doubles_mut(e), 2 * e.size());
  return ComplexMatrix(ComplexMatrix::Unchecked{}, a.dim_, std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix subtraction");
  std::vector<cplx> e = a.entries_;
  simd::active().axpy(-1.0, as_doubles(b.entries()), as_doubles_mut(e), 2 * e.size());
  return ComplexMatrix(ComplexMatrix::Unchecked{}, a.dim_, std::move(e));
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  std::vector<cplx> e(a.entries_.size());
  if (s.imag() == 0.0) {
    simd::active().scale(s.real(), as_doubles(a.entries()), as_doubles_mut(e), 2 * e.size());
  } else {
    simd::active().outer_row(&s, 1, a.entries_.data(), e.size(), e.data());
  }
  return ComplexMatrix(ComplexMatrix::Unchecked{}, a.dim_, std::move(e));
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim_, b.dim_, "matmul");
  const std::size_t n = a.dim_;
  std::vector<cplx> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += aik * b(k, j);
    }
  return ComplexMatrix(ComplexMatrix::Unchecked{}, n, std::move(e));
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  const double tol = kHermiticityTolerance * m.max_abs_entry();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
        throw InputError("matrix is not Hermitian at (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
      }
  *this = symmetrize(m);
}

HermitianMatrix HermitianMatrix::symmetrize(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<cplx> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i * n + i] = cplx(m(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx upper = 0.5 * (m(i, j) + std::conj(m(j, i)));
      e[i * n + j] = upper;
      e[j * n + i] = std::conj(upper);
    }
  }
  return HermitianMatrix(ComplexMatrix(ComplexMatrix::Unchecked{}, n, std::move(e)), 0);
}

HermitianMatrix HermitianMatrix::zeros(std::size_t dim) {
  return HermitianMatrix(ComplexMatrix::zeros(dim), 0);
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  return HermitianMatrix(ComplexMatrix::identity(dim), 0);
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> diag) {
  std::vector<cplx> d(diag.begin(), diag.end());
  return HermitianMatrix(ComplexMatrix::diagonal(d), 0);
}

HermitianMatrix HermitianMatrix::from_rows(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  return HermitianMatrix(ComplexMatrix::from_rows(rows));
}

// Addition and real scaling preserve exact conjugate symmetry, so no
// re-symmetrization is needed.
HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.m_ + b.m_, 0);
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.m_ - b.m_, 0);
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
  return HermitianMatrix(cplx(s, 0.0) * a.m_, 0);
}

HermitianMatrix HermitianMatrix::weighted_sum(std::span<const HermitianMatrix> terms,
                                              std::span<const double> weights) {
  if (terms.empty()) throw InputError("weighted_sum: no terms");
  if (terms.size() != weights.size()) throw InputError("weighted_sum: weight count mismatch");
  const std::size_t n = terms.front().dim();
  std::vector<cplx> e(n * n);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    require_same_dim(n, terms[t].dim(), "weighted_sum");
    simd::active().axpy(weights[t], as_doubles(terms[t].entries()), as_doubles_mut(e),
                        2 * e.size());
  }
  return HermitianMatrix(ComplexMatrix(ComplexMatrix::Unchecked{}, n, std::move(e)), 0);
}

}  // namespace hpineq
