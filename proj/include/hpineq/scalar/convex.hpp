#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string_view>
#include <type_traits>

#include "hpineq/error.hpp"

namespace hpineq::scalar {

// Fixed catalog; every member is convex on the whole real line.
enum class ConvexKind { kAbs, kSquare, kFourth, kExp, kRelu, kSoftplus };

std::string_view convex_name(ConvexKind k);
std::optional<ConvexKind> parse_convex(std::string_view name);
std::span<const ConvexKind> all_convex_kinds();

// f(x) = g(scale * (x - shift)) for a catalog function g; convex for any
// real scale and shift.
struct ConvexFunction {
  ConvexKind kind = ConvexKind::kAbs;
  double shift = 0.0;
  double scale = 1.0;

  // Generic over the number type so ABS/SQUARE/FOURTH/RELU can be evaluated
  // exactly on rationals. EXP and SOFTPLUS need a floating-point type.
  template <class T>
  T operator()(const T& x) const {
    const T u = (shift == 0.0 && scale == 1.0) ? x : T(scale) * (x - T(shift));
    switch (kind) {
      case ConvexKind::kAbs:
        return u < T(0) ? T(-u) : u;
      case ConvexKind::kSquare:
        return u * u;
      case ConvexKind::kFourth: {
        const T sq = u * u;
        return sq * sq;
      }
      case ConvexKind::kRelu:
        return u < T(0) ? T(0) : u;
      case ConvexKind::kExp:
      case ConvexKind::kSoftplus:
        if constexpr (std::is_floating_point_v<T>) {
          if (kind == ConvexKind::kExp) return std::exp(u);
          // log(1 + e^u) without overflow
          return std::max(u, T(0)) + std::log1p(std::exp(-std::abs(u)));
        } else {
          throw InputError("exp/softplus need floating-point evaluation");
        }
    }
    return T(0);
  }
};

}  // namespace hpineq::scalar
