// Reference kernels. Compiled with -ffp-contract=off so that every
// multiply-add rounds twice, independent of the target flags.

#include "hpineq/simd/kernels.hpp"

namespace hpineq::simd {
namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i];
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void outer_row_scalar(const cplx* x, std::size_t nx, const cplx* b,
                      std::size_t nb, cplx* y) {
  for (std::size_t j = 0; j < nx; ++j) {
    const double xr = x[j].real();
    const double xi = x[j].imag();
    cplx* out = y + j * nb;
    for (std::size_t l = 0; l < nb; ++l) {
      const double br = b[l].real();
      const double bi = b[l].imag();
      out[l] = cplx(xr * br - xi * bi, xr * bi + xi * br);
    }
  }
}

void caxpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double ar = a.real();
  const double ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = cplx(y[i].real() + (ar * xr - ai * xi), y[i].imag() + (ar * xi + ai * xr));
  }
}

cplx cdotu_scalar(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Backend::kScalar, "scalar", &axpy_scalar,
                                 &scale_scalar,    &dot_scalar,
                                 &outer_row_scalar, &caxpy_scalar, &cdotu_scalar};
  return table;
}

}  // namespace hpineq::simd
