#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hpineq/simd/kernels.hpp"

namespace hpineq::simd {

#ifndef HPINEQ_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_supports_avx2() {
#if defined(HPINEQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* kernels_for(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return &scalar_kernels();
    case Backend::kAvx2:
      return cpu_supports_avx2() ? avx2_kernels() : nullptr;
  }
  return nullptr;
}

namespace {

const KernelTable& select_from_environment() {
  const char* env = std::getenv("HPINEQ_SIMD");
  const std::string choice = env ? env : "auto";
  if (choice == "scalar") return scalar_kernels();
  if (choice == "avx2") {
    if (const KernelTable* t = kernels_for(Backend::kAvx2)) return *t;
    throw std::runtime_error("HPINEQ_SIMD=avx2 requested but AVX2/FMA is unavailable");
  }
  if (choice != "auto") {
    throw std::runtime_error("HPINEQ_SIMD must be one of scalar, avx2, auto");
  }
  if (const KernelTable* t = kernels_for(Backend::kAvx2)) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select_from_environment();
  return table;
}

}  // namespace hpineq::simd
