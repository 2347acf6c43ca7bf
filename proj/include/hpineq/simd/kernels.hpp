#pragma once

// Inner-loop kernels shared by the dense linear algebra.
//
// Every kernel has a scalar reference implementation and, on x86-64 builds,
// an AVX2+FMA variant. The variant used by the library is picked once per
// process: HPINEQ_SIMD=scalar|avx2|auto (default auto) in the environment,
// falling back to scalar when the CPU lacks AVX2/FMA. Results of the two
// variants agree to a few ulps, not bitwise (FMA and reduction order).

#include <complex>
#include <cstddef>
#include <string_view>

namespace hpineq::simd {

using cplx = std::complex<double>;

enum class Backend { kScalar, kAvx2 };

struct KernelTable {
  Backend backend;
  std::string_view name;

  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // y[i] = a * x[i]
  void (*scale)(double a, const double* x, double* y, std::size_t n);
  // sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y[j * nb + l] = x[j] * b[l] for j < nx, l < nb  (one Kronecker row)
  void (*outer_row)(const cplx* x, std::size_t nx, const cplx* b,
                    std::size_t nb, cplx* y);
  // y[i] += a * x[i] (complex)
  void (*caxpy)(cplx a, const cplx* x, cplx* y, std::size_t n);
  // sum_i x[i] * y[i] (complex, no conjugation)
  cplx (*cdotu)(const cplx* x, const cplx* y, std::size_t n);
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_kernels();

bool cpu_supports_avx2();

// Table for `b`, or nullptr when that backend is unavailable here.
const KernelTable* kernels_for(Backend b);

// Process-wide selection (see header comment).
const KernelTable& active();

}  // namespace hpineq::simd
