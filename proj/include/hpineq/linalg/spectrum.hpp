#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hpineq/linalg/matrix.hpp"

namespace hpineq {

inline constexpr double kDefaultPsdTolerance = 1e-8;

// Eigenvalues of a real symmetric n×n matrix given row-major, ascending.
// Householder tridiagonalization followed by implicit QL.
std::vector<double> symmetric_eigenvalues(std::span<const double> a, std::size_t n);

// Eigenvalues of a Hermitian matrix, ascending. Complex Householder
// reduction to a Hermitian tridiagonal, whose off-diagonal phases are then
// dropped (a diagonal unitary similarity) before implicit QL.
std::vector<double> eigenvalues(const HermitianMatrix& h);

double min_eigenvalue(const HermitianMatrix& h);

enum class Verdict { kHolds, kFails, kEquality };

std::string_view to_string(Verdict v);

// Outcome of deciding D >= 0 for D = symmetrize(A - B).
//   threshold = tolerance * max(1, scale), scale = ||D||_inf
//   EQUALITY  iff every eigenvalue of D lies in [-threshold, threshold]
//   HOLDS     iff min eigenvalue >= -threshold (and not EQUALITY)
//   FAILS     otherwise
struct LoewnerCertificate {
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double scale = 0.0;
  double tolerance = kDefaultPsdTolerance;
  Verdict verdict = Verdict::kFails;

  double threshold() const;
  // True for HOLDS and EQUALITY.
  bool holds() const { return verdict != Verdict::kFails; }
};

LoewnerCertificate certify_psd(const HermitianMatrix& d, double tol = kDefaultPsdTolerance);
LoewnerCertificate loewner_geq(const HermitianMatrix& a, const HermitianMatrix& b,
                               double tol = kDefaultPsdTolerance);

}  // namespace hpineq
