#pragma once

#include "lorhom/factor.hpp"

namespace lorhom {

/// Gaussian curvature K⋆ = (1 − Δ₀u)/Ω of Ω g₀, u = ½ log Ω, from the
/// closed-form derivatives of the factor.
double gaussian_curvature(const ConformalFactorSpec& spec, const SpherePoint& p);

/// Same quantity from 4th-order central differences of u in a rotated
/// chart that puts p on the chart equator.
double gaussian_curvature_fd(const ConformalFactorSpec& spec, const SpherePoint& p,
                             double step = 1e-3);

/// Tangential gradient of u = ½ log Ω.
Vec3 log_factor_gradient(const ConformalFactorSpec& spec, const SpherePoint& p);

}  // namespace lorhom
