#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hpineq {

using cplx = std::complex<double>;

// Size guard for anything that grows like m^p.
struct Budget {
  std::size_t max_tensor_dim = 4096;
};

// Dense square complex matrix, row-major. Immutable once built; every
// operation returns a fresh value.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  // Throws InputError if entries.size() != dim*dim or any entry is not finite.
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

  static ComplexMatrix zeros(std::size_t dim);
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t dim() const noexcept { return dim_; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  std::span<const cplx> entries() const noexcept { return entries_; }
  std::span<const cplx> row(std::size_t i) const { return {entries_.data() + i * dim_, dim_}; }

  double max_abs_entry() const;
  // Maximum absolute row sum.
  double infinity_norm() const;
  double frobenius_norm() const;

  ComplexMatrix adjoint() const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

 private:
  struct Unchecked {};
  ComplexMatrix(Unchecked, std::size_t dim, std::vector<cplx> entries)
      : dim_(dim), entries_(std::move(entries)) {}

  friend class HermitianMatrix;
  friend ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

  std::size_t dim_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Complex Hermitian matrix. Construction checks
// |a_ij - conj(a_ji)| <= 1e-12 * max|a| and then stores the exact
// symmetrization (a + a^*)/2, so the diagonal is real and the stored
// entries are exactly conjugate-symmetric.
class HermitianMatrix {
 public:
  static constexpr double kHermiticityTolerance = 1e-12;

  HermitianMatrix() = default;
  explicit HermitianMatrix(const ComplexMatrix& m);

  // Symmetrizes without the tolerance check. For results that are
  // Hermitian in exact arithmetic (Kronecker products, congruences).
  static HermitianMatrix symmetrize(const ComplexMatrix& m);

  static HermitianMatrix zeros(std::size_t dim);
  static HermitianMatrix identity(std::size_t dim);
  static HermitianMatrix diagonal(std::span<const double> diag);
  static HermitianMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t dim() const noexcept { return m_.dim(); }
  const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  std::span<const cplx> entries() const noexcept { return m_.entries(); }
  std::span<const cplx> row(std::size_t i) const { return m_.row(i); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

  double max_abs_entry() const { return m_.max_abs_entry(); }
  double infinity_norm() const { return m_.infinity_norm(); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a);
  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) = default;

  // Sum of `terms` with the given real weights, accumulated in order.
  static HermitianMatrix weighted_sum(std::span<const HermitianMatrix> terms,
                                      std::span<const double> weights);

 private:
  explicit HermitianMatrix(ComplexMatrix trusted, int) : m_(std::move(trusted)) {}
  ComplexMatrix m_;
};

// Entry-level views used by kernels: complex<double> is layout-compatible
// with double[2].
inline const double* as_doubles(std::span<const cplx> s) {
  return reinterpret_cast<const double*>(s.data());
}

}  // namespace hpineq
