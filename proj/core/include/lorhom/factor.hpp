#pragma once

#include <limits>
#include <string>
#include <vector>

#include "lorhom/sphere.hpp"

namespace lorhom {

enum class FactorVariant { Unit, Base, Modified };

/// Shape parameters of the base factor Ω = 1 + f₁(θ) f₂(φ).
///
/// f₁ is the smooth plateau bump in θ − π/2 (value 1 for |θ−π/2| ≤ plateau,
/// 0 beyond support). f₂ is e^{−1/φ²} sin²(1/φ) multiplied by a smooth
/// azimuth cutoff χ with plateau |φ| ≤ cutoff_plateau and support
/// |φ| < cutoff_support.
struct BaseFactorParams {
  double plateau_half_width = 0.3;
  double support_half_width = 0.6;
  double cutoff_plateau = kPi / 2.0;
  double cutoff_support = 3.0 * kPi / 4.0;
  /// Number of lightlike meridians φₙ = 1/(nπ) materialized, n ≤ max_index.
  int max_index = 8;
};

/// One negative bump of the modified factor: f = depth · h(d(·, center) / radius)
/// with h(0) = 1 and support radius = diameter / 2.
struct Dip {
  SpherePoint center;
  double diameter = 0.0;
  double depth = 0.0;
  double radius() const { return 0.5 * diameter; }
};

/// Value, tangential gradient and round-sphere Laplacian of Ω at a point.
struct FactorJet {
  double value = 1.0;
  double excess = 0.0;
  Vec3 gradient = Vec3::Zero();
  double laplacian = 0.0;
};

/// Declarative conformal factor Ω for g⋆ = Ω g₀.
///
/// Ω − 1 is always evaluated directly (never as Ω and then minus one), so
/// excesses far below the double-precision resolution of 1 stay exact.
class ConformalFactorSpec {
 public:
  static ConformalFactorSpec unit();
  static ConformalFactorSpec base(const BaseFactorParams& params = {});
  static ConformalFactorSpec modified(const BaseFactorParams& params, std::vector<Dip> dips);

  /// The factor c·Ω (constant conformal rescaling).
  ConformalFactorSpec scaled(double c) const;

  FactorVariant variant() const { return variant_; }
  const BaseFactorParams& base_params() const { return params_; }
  const std::vector<Dip>& dips() const { return dips_; }
  double scale() const { return scale_; }
  int max_index() const { return params_.max_index; }
  bool is_round() const { return variant_ == FactorVariant::Unit && scale_ == 1.0; }

  /// Ω(p).
  double value(const SpherePoint& p) const { return 1.0 + excess(p); }
  /// Ω(p) − 1.
  double excess(const SpherePoint& p) const;
  /// √Ω(p) − 1, the pointwise length surplus over g₀.
  double root_surplus(const SpherePoint& p) const;
  /// log(Ω − 1); −∞ where Ω ≤ 1. Analytic for the base factor so strict
  /// positivity survives underflow of e^{−1/φ²}.
  double log_excess(const SpherePoint& p) const;
  FactorJet jet(const SpherePoint& p) const;

  /// Smallest dip radius (∞ without dips); used to size quadrature panels.
  double min_dip_radius() const;

  bool operator==(const ConformalFactorSpec& other) const;

 private:
  ConformalFactorSpec() = default;

  double raw_excess(const SpherePoint& p) const;

  FactorVariant variant_ = FactorVariant::Unit;
  BaseFactorParams params_{};
  std::vector<Dip> dips_;
  double scale_ = 1.0;
  double band_sin_ = 0.0;
};

/// Ω(p), total and smooth in p.
inline double evaluate_factor(const ConformalFactorSpec& spec, const SpherePoint& p) {
  return spec.value(p);
}

/// Per-condition outcome of validate_factor.
struct ConditionCheck {
  std::string name;
  bool passed = true;
  long long checked = 0;
  double worst_polar = 0.0;
  double worst_azimuth = 0.0;
  /// Worst violation measure: |Ω−1| for (b),(c1), 1−Ω for (a), log(Ω−1)
  /// for (c2).
  double worst_value = 0.0;
};

struct FactorValidationReport {
  int polar_samples = 0;
  int azimuth_samples = 0;
  double tolerance = 1e-9;
  std::vector<ConditionCheck> conditions;

  bool all_passed() const;
  const ConditionCheck& condition(const std::string& name) const;
};

/// Checks conditions (a), (b), (c1), (c2) on a polar × azimuth grid.
/// Throws InvalidArgument below 256 × 512.
FactorValidationReport validate_factor(const ConformalFactorSpec& spec, int polar_samples,
                                       int azimuth_samples, double tolerance = 1e-9);

namespace detail {

/// Value and first two derivatives of a scalar function.
struct Jet1 {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Smooth step from 0 (y ≤ 0) to 1 (y ≥ 1) built from e^{−1/y}.
Jet1 smooth_step(double y);
/// 1 on |x| ≤ plateau, 0 on |x| ≥ support, smooth in between.
Jet1 plateau_bump(double x, double plateau, double support);
/// f₂(φ) = e^{−1/φ²} sin²(1/φ) χ(φ).
Jet1 azimuth_profile(double azimuth, const BaseFactorParams& params);
/// f₁(θ).
Jet1 polar_profile(double polar, const BaseFactorParams& params);
/// Dip profile h(x) = exp(1 − 1/(1 − x²)) on |x| < 1, peak h(0) = 1.
Jet1 dip_profile(double x);

}  // namespace detail

}  // namespace lorhom
