#pragma once

#include <optional>

#include "lorhom/factor.hpp"
#include "lorhom/mesh.hpp"

namespace lorhom {

struct ConjugateOptions {
  double tolerance = 1e-10;
  double initial_step = 1e-3;
  double min_step = 1e-14;
};

/// Arclength (in g⋆) of the first zero of the Jacobi field J'' + K⋆J = 0,
/// J(0) = 0, J'(0) = 1, along the g⋆-geodesic from `start` with initial
/// direction `direction`; nullopt if J has no zero before `max_length`.
/// Throws IntegratorFailure when step control breaks down.
std::optional<double> conjugate_point(const ConformalFactorSpec& spec, const SpherePoint& start,
                                      const Vec3& direction, double max_length,
                                      const ConjugateOptions& options = {});

/// max |∇u · e_φ| along the meridian of the given azimuth (u = ½ log Ω); zero
/// iff the meridian is a g⋆-geodesic.
double meridian_geodesic_residual(const ConformalFactorSpec& spec, double azimuth,
                                  int samples = 2048);

struct CutPointReport {
  double azimuth = 0.0;
  /// Largest arclength (g₀ = polar angle) up to which the meridian is
  /// discretely minimizing.
  double cut_distance = kPi;
  bool minimizing_to_end = true;
  double tolerance = 0.0;
  double geodesic_residual = 0.0;
  /// Largest amount by which a mesh path beats the meridian segment.
  double max_defect = 0.0;
};

/// Compares meridian segments from N against mesh distances. The mesh must
/// hold a chain at `azimuth`. Throws InvalidArgument if the meridian fails the
/// geodesic residual check (> 1e-6) or has no chain in the mesh.
CutPointReport cut_point(const ConformalFactorSpec& spec, double azimuth,
                         const GeodesicMesh& mesh);

}  // namespace lorhom
