#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace lorhom {

using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;

/// A point of the unit sphere S² embedded in R³.
///
/// All geometry is done on the 3-vector. Polar and azimuthal angles are
/// derived on demand and only used for reporting or for closed-form factor
/// evaluation; nothing interpolates azimuths across the seam φ = ±π.
class SpherePoint {
 public:
  SpherePoint();
  /// Normalizes `v`; throws InvalidArgument for a (near) zero vector.
  explicit SpherePoint(const Vec3& v);

  static SpherePoint from_angles(double polar, double azimuth);
  static SpherePoint north() { return SpherePoint(Vec3(0.0, 0.0, 1.0)); }
  static SpherePoint south() { return SpherePoint(Vec3(0.0, 0.0, -1.0)); }
  static SpherePoint on_equator(double azimuth) {
    return from_angles(kPi / 2.0, azimuth);
  }

  const Vec3& position() const { return p_; }
  double x() const { return p_.x(); }
  double y() const { return p_.y(); }
  double z() const { return p_.z(); }

  /// θ ∈ [0, π], continuous everywhere.
  double polar() const;
  /// φ ∈ (−π, π]; 0 at the poles.
  double azimuth() const;
  /// True on the meridian φ = ±π not covered by the azimuth chart.
  bool on_seam(double tol = 1e-12) const;
  /// Distance (in the chart) to the polar axis, sin θ.
  double axis_distance() const { return std::hypot(p_.x(), p_.y()); }

 private:
  Vec3 p_;
};

/// Great-circle distance of the round metric g₀.
double distance(const SpherePoint& a, const SpherePoint& b);

/// Point at fraction `s` of the shortest great-circle arc from a to b.
SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double s);

/// Unit tangent e_θ (points south); zero-safe at the poles (returns the
/// direction of the φ = 0 meridian there).
Vec3 polar_direction(const SpherePoint& p);
/// Unit tangent e_φ (points east).
Vec3 azimuth_direction(const SpherePoint& p);

/// Moves from `p` along the geodesic with initial tangent `v` (|v| = angle).
SpherePoint exp_map(const SpherePoint& p, const Vec3& v);

/// Signed angle from azimuth a to azimuth b wrapped into (−π, π], computed
/// from the unit vectors so no seam arithmetic leaks out.
double azimuth_step(double from, double to);

/// Meridian azimuth φₙ = 1/(nπ) of the lightlike family.
inline double meridian_azimuth(int n) { return 1.0 / (static_cast<double>(n) * kPi); }

/// Equator midpoint azimuth between φₙ and φₙ₊₁.
inline double midpoint_azimuth(int n) {
  return 0.5 * (meridian_azimuth(n) + meridian_azimuth(n + 1));
}

}  // namespace lorhom
