#pragma once

#include <string>
#include <vector>

#include "lorhom/certifier.hpp"
#include "lorhom/factor.hpp"

namespace lorhom {

/// Excess neighbourhood Uₙ of pₙ: Ω ≥ 1 + μ on the cap of diameter δ.
struct ExcessNeighbourhood {
  int n = 0;
  double mu = 0.0;
  double delta = 0.0;
};

/// μₙ = ½(Ω(pₙ) − 1); δₙ = twice the largest cap radius ≤ (φₙ − φₙ₊₁)/4
/// whose sampled minimum of Ω − 1 exceeds μₙ. Throws InvalidArgument unless
/// 1 ≤ n ≤ N_max − 1 and Ω(pₙ) − 1 > 0 (computed directly, not as Ω then −1).
ExcessNeighbourhood derive_excess(const ConformalFactorSpec& factor, int n);

/// How dip depths are bounded.
enum class DipRule {
  /// (1 − ν_m)(π + D_m)² > π² with D_m = minₙ d₀(q_m, pₙ) − ε_m: a curve
  /// through pₙ that meets V̄_m has g₀-length ≥ π + D_m, so its g̃⋆-length
  /// stays above π. ν_m = min(½, 0.9·(1 − (π/(π+D_m))²)).
  DetourBound,
  /// 2 εₙ νₙ ≤ ¼ (√(1+μ_m) − 1) δ_m for m ∈ {n−1, n+1}: the crossing-budget
  /// form. With μ₂ ≈ 1e-25 it forces ν₁ ≲ 1e-28.
  CrossingBudget,
};

const char* to_string(DipRule r);

/// Per-index data of the timelike construction. Index k of mu/delta/p
/// belongs to n = k + 1 ≤ N_max − 1; index k of q/nu/epsilon to n = k + 1 ≤ N_max.
struct TimelikeParamSet {
  int max_index = 0;
  DipRule rule = DipRule::DetourBound;
  std::vector<SpherePoint> p;
  std::vector<double> mu;
  std::vector<double> delta;
  std::vector<SpherePoint> q;
  std::vector<double> nu;
  std::vector<double> epsilon;

  /// Geometric invariants (disjointness, separation, strict decrease, rule
  /// inequality); empty when all hold.
  std::vector<std::string> violations() const;
  /// Throws InvalidArgument listing the violations.
  void validate() const;
};

/// Assembles a param set and validates it (throws InvalidArgument).
TimelikeParamSet make_param_set(int max_index, DipRule rule, std::vector<double> mu,
                                std::vector<double> delta, std::vector<double> nu,
                                std::vector<double> epsilon);

/// εₙ = min(meridian-neighbour separation of qₙ, distance to the nearest U
/// boundary)/8, νₙ by the rule, both made strictly decreasing by cumulative
/// minima. `excesses` must hold n = 1..N_max−1 in order.
TimelikeParamSet choose_dips(const std::vector<ExcessNeighbourhood>& excesses, int max_index,
                             DipRule rule = DipRule::DetourBound);

/// Sampled check Ω ≥ 1 + μₙ on every Uₙ; empty when it holds.
std::vector<std::string> sample_excess_violations(const ConformalFactorSpec& base,
                                                  const TimelikeParamSet& params);

/// Ω̃ = Ω − Σ νₙ h(d₀(·, qₙ)/(εₙ/2)), h(0) = 1.
ConformalFactorSpec build_modified_factor(const ConformalFactorSpec& base,
                                          const TimelikeParamSet& params);

/// derive_excess for n < N_max, choose_dips, build_modified_factor; the base
/// factor takes its shape from `shape` with max_index replaced.
struct TimelikePipeline {
  ConformalFactorSpec base;
  TimelikeParamSet params;
  ConformalFactorSpec modified;
};
TimelikePipeline build_timelike_pipeline(int max_index = 6, DipRule rule = DipRule::DetourBound,
                                         BaseFactorParams shape = {});

struct Claim32Entry {
  int n = 0;
  double excess = 0.0;
  double coarse_excess = 0.0;
  double error_bar = 0.0;
  bool validated = false;
  bool inconclusive = false;
  bool negative = false;
};

/// Mesh estimate of d(N,pₙ) + d(pₙ,S) − π under the factor for each
/// n ≤ min(N_max − 1, `up_to`), with the two-level difference as error bar.
std::vector<Claim32Entry> validate_claim32(const TimelikeParamSet& params,
                                           const ExcessField& coarse, const ExcessField& fine,
                                           int up_to = 4);

}  // namespace lorhom
