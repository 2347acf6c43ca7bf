// AVX2 + FMA variants. This translation unit is built with -mavx2 -mfma and
// must only be entered after cpu_supports_avx2() returned true.

#include <immintrin.h>

#include "hpineq/simd/kernels.hpp"

namespace hpineq::simd {
namespace {

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d y1 = _mm256_loadu_pd(y + i + 4);
    y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), y0);
    y1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4), y1);
    _mm256_storeu_pd(y + i, y0);
    _mm256_storeu_pd(y + i + 4, y1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), y0);
    _mm256_storeu_pd(y + i, y0);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) y[i] = a * x[i];
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                           _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  __m128d lo = _mm256_castpd256_pd128(acc0);
  __m128d hi = _mm256_extractf128_pd(acc0, 1);
  lo = _mm_add_pd(lo, hi);
  lo = _mm_add_sd(lo, _mm_unpackhi_pd(lo, lo));
  double s = _mm_cvtsd_f64(lo);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

// Two complex doubles per register, laid out [re0, im0, re1, im1].
// (xr + i xi) * (br + i bi): even lanes xr*br - xi*bi, odd lanes
// xr*bi + xi*br, which is exactly fmaddsub(xr, b, xi * swap(b)).
void outer_row_avx2(const cplx* x, std::size_t nx, const cplx* b,
                    std::size_t nb, cplx* y) {
  const double* bd = reinterpret_cast<const double*>(b);
  for (std::size_t j = 0; j < nx; ++j) {
    const __m256d xr = _mm256_set1_pd(x[j].real());
    const __m256d xi = _mm256_set1_pd(x[j].imag());
    double* out = reinterpret_cast<double*>(y + j * nb);
    std::size_t l = 0;
    for (; l + 2 <= nb; l += 2) {
      const __m256d bv = _mm256_loadu_pd(bd + 2 * l);
      const __m256d bs = _mm256_permute_pd(bv, 0b0101);
      const __m256d r = _mm256_fmaddsub_pd(xr, bv, _mm256_mul_pd(xi, bs));
      _mm256_storeu_pd(out + 2 * l, r);
    }
    if (l < nb) {
      const __m128d bv = _mm_loadu_pd(bd + 2 * l);
      const __m128d bs = _mm_permute_pd(bv, 0b01);
      const __m128d r = _mm_fmaddsub_pd(_mm256_castpd256_pd128(xr), bv,
                                        _mm_mul_pd(_mm256_castpd256_pd128(xi), bs));
      _mm_storeu_pd(out + 2 * l, r);
    }
  }
}

void caxpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d prod =
        _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, _mm256_permute_pd(xv, 0b0101)));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

// acc_same collects [xr*yr, xi*yi] and acc_swap [xr*yi, xi*yr]; the real
// part is the even-minus-odd sum of the first, the imaginary part the full
// sum of the second.
cplx cdotu_avx2(const cplx* x, const cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc_same = _mm256_setzero_pd();
  __m256d acc_swap = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_same = _mm256_fmadd_pd(xv, yv, acc_same);
    acc_swap = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc_swap);
  }
  alignas(32) double s[4];
  alignas(32) double t[4];
  _mm256_store_pd(s, acc_same);
  _mm256_store_pd(t, acc_swap);
  double re = (s[0] + s[2]) - (s[1] + s[3]);
  double im = (t[0] + t[2]) + (t[1] + t[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{Backend::kAvx2, "avx2",     &axpy_avx2,
                                 &scale_avx2,    &dot_avx2,  &outer_row_avx2,
                                 &caxpy_avx2,    &cdotu_avx2};
  return &table;
}

}  // namespace hpineq::simd
