#pragma once

#include <span>
#include <vector>

namespace lorhom {

/// Gauss–Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline constexpr int kMaxGaussOrder = 64;

/// Cached rule of the given order (1..kMaxGaussOrder).
const GaussRule& gauss_legendre(int order);

}  // namespace lorhom
