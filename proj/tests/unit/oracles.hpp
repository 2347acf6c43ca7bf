#pragma once

// Naive reference computations used as oracles by the unit and acceptance
// tests, plus random input generators.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "hpineq/linalg/matrix.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Dense = std::vector<std::vector<cplx>>;

inline Dense dense(const hpineq::ComplexMatrix& m) {
  Dense d(m.dim(), std::vector<cplx>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) d[i][j] = m(i, j);
  return d;
}
inline Dense dense(const hpineq::HermitianMatrix& m) { return dense(m.matrix()); }

inline Dense add(const Dense& a, const Dense& b, double wb = 1.0) {
  Dense c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += wb * b[i][j];
  return c;
}

inline Dense zeros(std::size_t n) { return Dense(n, std::vector<cplx>(n)); }

inline Dense kron(const Dense& a, const Dense& b) {
  const std::size_t na = a.size(), nb = b.size();
  Dense c = zeros(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) c[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return c;
}

inline Dense power(const Dense& a, int p) {
  Dense r = a;
  for (int i = 1; i < p; ++i) r = kron(r, a);
  return r;
}

inline double max_abs_diff(const Dense& a, const Dense& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

inline double max_abs(const Dense& a) {
  double d = 0.0;
  for (const auto& r : a)
    for (const cplx& z : r) d = std::max(d, std::abs(z));
  return d;
}

// sum over every subset of {0..n-1} with |subset| == k of (sum A_i)^{⊗p}
inline Dense subset_power_sum(const std::vector<Dense>& mats, int k, int p) {
  const int n = static_cast<int>(mats.size());
  const std::size_t m = mats.front().size();
  std::size_t dim = 1;
  for (int i = 0; i < p; ++i) dim *= m;
  Dense total = zeros(dim);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Dense s = zeros(m);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s = add(s, mats[static_cast<std::size_t>(i)]);
    total = add(total, power(s, p));
  }
  return total;
}

inline std::vector<Dense> dense_all(const std::vector<hpineq::HermitianMatrix>& ms) {
  std::vector<Dense> out;
  for (const auto& m : ms) out.push_back(dense(m));
  return out;
}

inline Eigen::MatrixXcd to_eigen(const hpineq::ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return e;
}

// Ascending eigenvalues from Eigen's self-adjoint solver.
inline std::vector<double> eigenvalues(const hpineq::HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h.matrix()), Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.begin(), v.end());
  return v;
}

// Permanent / determinant by summing over all m! permutations.
inline cplx brute_force_sum(const hpineq::ComplexMatrix& x, bool signed_sum) {
  const std::size_t m = x.dim();
  std::vector<int> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<int>(i);
  cplx total = 0.0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) inversions += perm[i] > perm[j];
    cplx prod = 1.0;
    for (std::size_t i = 0; i < m; ++i) prod *= x(i, static_cast<std::size_t>(perm[i]));
    total += (signed_sum && inversions % 2) ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline hpineq::ComplexMatrix random_complex(std::size_t m, std::mt19937_64& rng, double sd = 1.0) {
  std::normal_distribution<double> g(0.0, sd);
  std::vector<cplx> e(m * m);
  for (auto& z : e) {
    const double re = g(rng);
    const double im = g(rng);
    z = cplx(re, im);
  }
  return hpineq::ComplexMatrix(m, std::move(e));
}

inline hpineq::HermitianMatrix random_hermitian(std::size_t m, std::mt19937_64& rng) {
  const hpineq::ComplexMatrix x = random_complex(m, rng);
  return hpineq::HermitianMatrix::symmetrize(x + x.adjoint());
}

// X X^* + shift I: PSD, PD when shift > 0.
inline hpineq::HermitianMatrix random_psd(std::size_t m, std::mt19937_64& rng, double shift = 0.0) {
  const hpineq::ComplexMatrix x = random_complex(m, rng);
  hpineq::ComplexMatrix g = hpineq::matmul(x, x.adjoint());
  if (shift != 0.0) g = g + cplx(shift) * hpineq::ComplexMatrix::identity(m);
  return hpineq::HermitianMatrix::symmetrize(g);
}

}  // namespace oracle
