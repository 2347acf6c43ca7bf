#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "hpineq/linalg/matrix.hpp"

namespace hpineq {

enum class SpectrumKind { kUniform, kLogUniform };

struct PdSampleConfig {
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  double condition_target = 10.0;
  SpectrumKind spectrum = SpectrumKind::kLogUniform;
};

// Q diag(lambda) Q^* with Q the unitary factor of a seeded complex Gaussian
// matrix (phases fixed so Q is Haar distributed). The spectrum is pinned at
// s and s / condition_target, interior eigenvalues are drawn in between
// (uniformly or log-uniformly), and s is a log-uniform overall scale in
// [1/4, 4]. Identical configs give bit-identical matrices.
HermitianMatrix random_pd(const PdSampleConfig& cfg);

// Haar-random unitary of the given dimension.
ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng);

}  // namespace hpineq
