#include "hpineq/linalg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hpineq/error.hpp"
#include "hpineq/simd/kernels.hpp"

namespace hpineq {
namespace {

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[k] couples k and k+1; off.size() == n (last unused)
};

// Householder reduction working on the full (both triangles) trailing block
// so every update is a contiguous row operation.
Tridiagonal tridiagonalize(std::vector<double> a, std::size_t n) {
  const auto& k = simd::active();
  Tridiagonal t{std::vector<double>(n), std::vector<double>(n, 0.0)};
  std::vector<double> v(n), p(n), w(n);

  for (std::size_t c = 0; c + 2 < n; ++c) {
    const std::size_t len = n - c - 1;
    const double* x = &a[c * n + c + 1];
    double xmax = 0.0;
    for (std::size_t i = 0; i < len; ++i) xmax = std::max(xmax, std::abs(x[i]));
    if (xmax == 0.0) {
      t.off[c] = 0.0;
      continue;
    }
    for (std::size_t i = 0; i < len; ++i) v[i] = x[i] / xmax;
    const double xnorm = std::sqrt(k.dot(v.data(), v.data(), len));
    const double alpha = (v[0] > 0.0 ? -xnorm : xnorm);
    v[0] -= alpha;
    const double vnorm2 = k.dot(v.data(), v.data(), len);
    t.off[c] = alpha * xmax;
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;

    // p = beta * A' v over the trailing block A' = a[c+1.., c+1..]
    for (std::size_t i = 0; i < len; ++i) {
      p[i] = beta * k.dot(&a[(c + 1 + i) * n + c + 1], v.data(), len);
    }
    const double kappa = 0.5 * beta * k.dot(p.data(), v.data(), len);
    for (std::size_t i = 0; i < len; ++i) w[i] = p[i] - kappa * v[i];
    // A' -= v w^T + w v^T
    for (std::size_t i = 0; i < len; ++i) {
      double* r = &a[(c + 1 + i) * n + c + 1];
      k.axpy(-v[i], w.data(), r, len);
      k.axpy(-w[i], v.data(), r, len);
    }
  }
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = a[i * n + i];
  if (n >= 2) t.off[n - 2] = a[(n - 2) * n + n - 1];
  return t;
}

struct Reflector {
  std::vector<cplx> v;
  double tau = 0.0;     // H = I - tau v v^*, zero when nothing is annihilated
  double offdiag = 0.0; // |alpha|, the new subdiagonal magnitude
};

// Reflector sending u = conj(row) to alpha e_1.
Reflector make_reflector(const cplx* row, std::size_t len) {
  Reflector r;
  r.v.resize(len);
  double umax = 0.0;
  for (std::size_t i = 0; i < len; ++i) umax = std::max(umax, std::abs(row[i]));
  if (umax == 0.0) return r;
  double norm2 = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    r.v[i] = std::conj(row[i]) / umax;
    norm2 += std::norm(r.v[i]);
  }
  const double unorm = std::sqrt(norm2);
  const double a0 = std::abs(r.v[0]);
  const cplx phase = a0 == 0.0 ? cplx(1.0) : r.v[0] / a0;
  r.v[0] = phase * (a0 + unorm);
  const double vnorm2 = norm2 - a0 * a0 + (a0 + unorm) * (a0 + unorm);
  r.tau = 2.0 / vnorm2;
  r.offdiag = unorm * umax;
  return r;
}

// Householder reduction of a Hermitian matrix (full row-major storage) to
// real symmetric tridiagonal form with the same eigenvalues. Each step makes
// a single pass over the trailing rows: the rank-2 update of a row is
// followed immediately by its product with the next reflector.
Tridiagonal hermitian_tridiagonalize(std::vector<cplx> a, std::size_t n) {
  const auto& k = simd::active();
  Tridiagonal t{std::vector<double>(n), std::vector<double>(n, 0.0)};
  if (n == 1) {
    t.diag[0] = a[0].real();
    return t;
  }
  auto row = [&](std::size_t i) { return &a[i * n]; };

  Reflector ref = make_reflector(row(0) + 1, n - 1);
  std::vector<cplx> p(n), w(n), cv(n), cw(n);
  t.diag[0] = a[0].real();
  if (n == 2) {
    t.off[0] = std::abs(a[1]);
    t.diag[1] = a[3].real();
    return t;
  }
  t.off[0] = ref.offdiag;
  for (std::size_t i = 0; i + 1 < n; ++i) p[i] = ref.tau * k.cdotu(row(i + 1) + 1, ref.v.data(), n - 1);

  for (std::size_t c = 0; c + 2 < n; ++c) {
    const std::size_t len = n - c - 1;
    const cplx* v = ref.v.data();
    cplx vp = 0.0;
    for (std::size_t i = 0; i < len; ++i) vp += std::conj(v[i]) * p[i];
    const double kappa = 0.5 * ref.tau * vp.real();
    for (std::size_t i = 0; i < len; ++i) {
      w[i] = p[i] - kappa * v[i];
      cv[i] = std::conj(v[i]);
      cw[i] = std::conj(w[i]);
    }
    const bool active = ref.tau != 0.0;

    // Row c+1 is final after this update.
    cplx* r0 = row(c + 1) + c + 1;
    if (active) {
      k.caxpy(-v[0], cw.data(), r0, len);
      k.caxpy(-w[0], cv.data(), r0, len);
    }
    t.diag[c + 1] = r0[0].real();

    const bool more = c + 3 < n;
    Reflector next;
    if (more) {
      next = make_reflector(r0 + 1, len - 1);
      t.off[c + 1] = next.offdiag;
    } else {
      t.off[c + 1] = std::abs(r0[1]);
    }
    for (std::size_t i = 1; i < len; ++i) {
      cplx* r = row(c + 1 + i) + c + 2;
      if (active) {
        k.caxpy(-v[i], cw.data() + 1, r, len - 1);
        k.caxpy(-w[i], cv.data() + 1, r, len - 1);
      }
      if (more) p[i - 1] = next.tau * k.cdotu(r, next.v.data(), len - 1);
    }
    if (!more) t.diag[n - 1] = row(n - 1)[n - 1].real();
    ref = std::move(next);
  }
  return t;
}

// Implicit QL with Wilkinson shifts, eigenvalues only.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = d.size();
  if (n == 0) return;
  e[n - 1] = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw std::runtime_error("eigenvalue iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, pp = 0.0;
        std::size_t i = m;
        bool deflated = false;
        while (i-- > l) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= pp;
            e[m] = 0.0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - pp;
          r = (d[i] - g) * s + 2.0 * c * b;
          pp = s * r;
          d[i + 1] = g + pp;
          g = c * r - b;
        }
        if (deflated) continue;
        d[l] -= pp;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::span<const double> a, std::size_t n) {
  if (a.size() != n * n) throw InputError("symmetric_eigenvalues: size mismatch");
  for (double x : a)
    if (!std::isfinite(x)) throw InputError("symmetric_eigenvalues: non-finite entry");
  if (n == 0) return {};
  Tridiagonal t = tridiagonalize(std::vector<double>(a.begin(), a.end()), n);
  tridiagonal_ql(t.diag, t.off);
  std::sort(t.diag.begin(), t.diag.end());
  return t.diag;
}

std::vector<double> eigenvalues(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  std::vector<cplx> a(h.entries().begin(), h.entries().end());
  for (const cplx& z : a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InputError("eigenvalues: non-finite entry");
  if (n == 0) return {};
  Tridiagonal t = hermitian_tridiagonalize(std::move(a), n);
  tridiagonal_ql(t.diag, t.off);
  std::sort(t.diag.begin(), t.diag.end());
  return t.diag;
}

double min_eigenvalue(const HermitianMatrix& h) { return eigenvalues(h).front(); }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return "HOLDS";
    case Verdict::kFails:
      return "FAILS";
    case Verdict::kEquality:
      return "EQUALITY";
  }
  return "?";
}

double LoewnerCertificate::threshold() const { return tolerance * std::max(1.0, scale); }

LoewnerCertificate certify_psd(const HermitianMatrix& d, double tol) {
  if (!(tol >= 0.0)) throw InputError("tolerance must be non-negative");
  const std::vector<double> ev = eigenvalues(d);
  LoewnerCertificate cert;
  cert.min_eigenvalue = ev.front();
  cert.max_eigenvalue = ev.back();
  cert.scale = d.infinity_norm();
  cert.tolerance = tol;
  const double thr = cert.threshold();
  if (cert.min_eigenvalue >= -thr && cert.max_eigenvalue <= thr) {
    cert.verdict = Verdict::kEquality;
  } else if (cert.min_eigenvalue >= -thr) {
    cert.verdict = Verdict::kHolds;
  } else {
    cert.verdict = Verdict::kFails;
  }
  return cert;
}

LoewnerCertificate loewner_geq(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  if (a.dim() != b.dim()) {
    throw InputError("loewner_geq: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()) + ")");
  }
  return certify_psd(a - b, tol);
}

}  // namespace hpineq
