#include "hpineq/linalg/random_pd.hpp"

#include <cmath>
#include <vector>

#include "hpineq/error.hpp"

namespace hpineq {

ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  // Columns stored contiguously: col[j][i].
  std::vector<std::vector<cplx>> col(dim, std::vector<cplx>(dim));
  for (auto& c : col)
    for (auto& z : c) {
      const double re = normal(rng);
      const double im = normal(rng);
      z = cplx(re, im);
    }

  // Modified Gram-Schmidt, two passes for orthogonality to working precision.
  for (std::size_t j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t q = 0; q < j; ++q) {
        cplx proj = 0.0;
        for (std::size_t i = 0; i < dim; ++i) proj += std::conj(col[q][i]) * col[j][i];
        for (std::size_t i = 0; i < dim; ++i) col[j][i] -= proj * col[q][i];
      }
    }
    double norm = 0.0;
    for (const cplx& z : col[j]) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm == 0.0) throw InputError("random_unitary: degenerate Gaussian sample");
    // Dividing by the norm only (R has a positive diagonal) keeps Q Haar.
    for (cplx& z : col[j]) z /= norm;
  }

  std::vector<cplx> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) e[i * dim + j] = col[j][i];
  return ComplexMatrix(dim, std::move(e));
}

HermitianMatrix random_pd(const PdSampleConfig& cfg) {
  if (cfg.dim == 0) throw InputError("random_pd: dim must be positive");
  if (!(cfg.condition_target >= 1.0) || !std::isfinite(cfg.condition_target)) {
    throw InputError("random_pd: condition target must be a finite value >= 1");
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const double scale = std::exp(std::log(4.0) * (2.0 * unit(rng) - 1.0));
  const double hi = scale;
  const double lo = scale / cfg.condition_target;
  std::vector<double> lambda(cfg.dim);
  if (cfg.dim == 1) {
    lambda[0] = hi;
  } else {
    lambda.front() = hi;
    lambda.back() = lo;
    for (std::size_t i = 1; i + 1 < cfg.dim; ++i) {
      const double u = unit(rng);
      lambda[i] = cfg.spectrum == SpectrumKind::kUniform
                      ? lo + u * (hi - lo)
                      : std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)));
    }
  }

  const ComplexMatrix q = random_unitary(cfg.dim, rng);
  const std::size_t n = cfg.dim;
  std::vector<cplx> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += q(i, k) * lambda[k] * std::conj(q(j, k));
      e[i * n + j] = s;
    }
  return HermitianMatrix::symmetrize(ComplexMatrix(n, std::move(e)));
}

}  // namespace hpineq
