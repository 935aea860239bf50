#pragma once

#include <iosfwd>
#include <vector>

#include "lorhom/curve.hpp"

namespace lorhom {

/// Curve t ↦ (τ(t), γ(t)) in ℝ × S² with g = −dt² + π*g⋆.
///
/// For lifts τ(t) = t; deform_to_timelike replaces τ by a reparametrized
/// time while keeping γ sample-for-sample.
class SpacetimeCurve {
 public:
  /// Throws InvalidArgument unless `times` is strictly increasing and
  /// matches the spatial samples.
  SpacetimeCurve(std::vector<double> times, SphereCurve space, ConformalFactorSpec factor,
                 bool deformed = false);

  const std::vector<double>& times() const { return times_; }
  const SphereCurve& space() const { return space_; }
  const ConformalFactorSpec& factor() const { return factor_; }
  bool deformed() const { return deformed_; }
  std::size_t size() const { return times_.size(); }

 private:
  std::vector<double> times_;
  SphereCurve space_;
  ConformalFactorSpec factor_;
  bool deformed_ = false;
};

enum class CausalVerdict { Timelike, Lightlike, Causal, NonCausal };

const char* to_string(CausalVerdict v);

struct CausalClass {
  CausalVerdict verdict = CausalVerdict::Lightlike;
  /// Largest g⋆-speed / time-speed over the segments.
  double worst_ratio = 0.0;
  /// Smallest such ratio.
  double min_ratio = 0.0;
  /// max |ratio − 1|, computed on split lengths.
  double max_deviation = 0.0;
  std::size_t worst_segment = 0;
  /// Time span minus L⋆ of the projection.
  double slack = 0.0;
  std::vector<double> ratios;
};

inline constexpr double kCausalTolerance = 1e-7;

/// Γ(t) = (t, γ(t)) for the meridian of azimuth φ, t ∈ [0, π].
SpacetimeCurve lift_azimuth(double azimuth, const ConformalFactorSpec& factor, int samples = 2048);

/// Γₙ for φₙ = 1/(nπ); throws InvalidArgument unless 1 ≤ n ≤ N_max.
SpacetimeCurve lift_meridian(int n, const ConformalFactorSpec& factor, int samples = 2048);

/// t ↦ (t, p), t ∈ [0, π].
SpacetimeCurve constant_curve(const SpherePoint& p, const ConformalFactorSpec& factor,
                              int samples = 2048);

CausalClass classify(const SpacetimeCurve& curve, double tol = kCausalTolerance);

/// Keeps the spatial trace and sets Δτ = L⋆(segment) + slack·Δt/T.
/// Throws NoSlack when slack ≤ 1e-9 or the curve is not causal.
SpacetimeCurve deform_to_timelike(const SpacetimeCurve& curve);

struct LimitCurveReport {
  /// sup_t d₀(γₙ(t), γ(t)) per curve of the sequence.
  std::vector<double> distances;
  /// Non-increasing along the sequence.
  bool monotone = true;
  CausalClass limit;
};

/// C⁰ distances of a sequence to a candidate limit and the limit's causal
/// class. Throws InvalidArgument unless all curves share the time samples.
LimitCurveReport limit_curve_check(const std::vector<SpacetimeCurve>& sequence,
                                   const SpacetimeCurve& limit);

/// CSV with header t,tau,x,y,z,ratio (ratio of the segment starting at the
/// sample; the last row repeats the final segment).
void write_spacetime_csv(std::ostream& os, const SpacetimeCurve& curve);

}  // namespace lorhom
