#pragma once

#include <iosfwd>
#include <vector>

#include "lorhom/factor.hpp"
#include "lorhom/sphere.hpp"

namespace lorhom {

/// A g⋆-length carried as (g₀-length, surplus ∫(√Ω − 1) ds₀).
///
/// Surpluses of the base factor reach 1e-20 and below, far under the ulp of
/// π, so comparisons against π are done on the parts separately.
struct SplitLength {
  double base = 0.0;
  double surplus = 0.0;

  double total() const { return base + surplus; }

  SplitLength& operator+=(const SplitLength& o) {
    base += o.base;
    surplus += o.surplus;
    return *this;
  }
  friend SplitLength operator+(SplitLength a, const SplitLength& b) { return a += b; }
  friend SplitLength operator-(const SplitLength& a, const SplitLength& b) {
    return {a.base - b.base, a.surplus - b.surplus};
  }
  /// Length minus `ref`, with the g₀ parts cancelled first.
  double excess_over(double ref) const { return (base - ref) + surplus; }
};

inline constexpr int kDefaultQuadratureOrder = 8;

/// Polyline on S²: samples t₀ < … < t_T with great-circle interpolation.
class SphereCurve {
 public:
  SphereCurve() = default;
  /// Throws InvalidArgument on non-increasing parameters, size mismatch,
  /// fewer than two samples, or (near) antipodal neighbours.
  SphereCurve(std::vector<double> params, std::vector<SpherePoint> points);

  std::size_t size() const { return points_.size(); }
  std::size_t segments() const { return points_.empty() ? 0 : points_.size() - 1; }
  const std::vector<double>& params() const { return params_; }
  const std::vector<SpherePoint>& points() const { return points_; }
  double param(std::size_t i) const { return params_[i]; }
  const SpherePoint& point(std::size_t i) const { return points_[i]; }
  const SpherePoint& front() const { return points_.front(); }
  const SpherePoint& back() const { return points_.back(); }

 private:
  std::vector<double> params_;
  std::vector<SpherePoint> points_;
};

/// g₀-arclength meridian of the given azimuth from N (t = 0) to S (t = π),
/// `samples` + 1 points, poles exact.
SphereCurve meridian(double azimuth, int samples = 2048);

/// Equator arc θ = π/2 from azimuth `from` to `to` (parameter = azimuth).
SphereCurve equator_arc(double from, double to, int samples = 256);

/// g⋆-length of the great-circle chord a → b, Gauss–Legendre of the given
/// order per panel; panels are refined near dips narrower than the chord.
SplitLength segment_length(const ConformalFactorSpec& spec, const SpherePoint& a,
                           const SpherePoint& b, int order = kDefaultQuadratureOrder);

/// Per-segment split lengths.
std::vector<SplitLength> segment_lengths(const ConformalFactorSpec& spec, const SphereCurve& curve,
                                         int order = kDefaultQuadratureOrder);

SplitLength length_split(const ConformalFactorSpec& spec, const SphereCurve& curve,
                         int order = kDefaultQuadratureOrder);

/// ∫√Ω ds₀ along the polyline.
inline double length(const ConformalFactorSpec& spec, const SphereCurve& curve,
                     int order = kDefaultQuadratureOrder) {
  return length_split(spec, curve, order).total();
}

/// g₀ detour len(a,b) − (θ(b) − θ(a)) ≥ 0, with relative accuracy (no
/// cancellation between len and the polar rise). Numerically meridional
/// pairs (|sin Δφ| ≤ 1e-14) and pairs at a pole give exactly 0. `len` is the
/// precomputed g₀ distance, or negative to compute it.
double polar_detour(const SpherePoint& a, const SpherePoint& b, double len = -1.0);

/// L⋆(γ) − (θ(end) − θ(start)), summed as detours plus surpluses so that
/// excesses far below the ulp of π are kept. For curves from N to S this is
/// L⋆(γ) − π.
double polar_excess(const ConformalFactorSpec& spec, const SphereCurve& curve,
                    int order = kDefaultQuadratureOrder);

/// CSV with header t,x,y,z,theta,phi,omega.
void write_curve_csv(std::ostream& os, const ConformalFactorSpec& spec, const SphereCurve& curve);

}  // namespace lorhom
