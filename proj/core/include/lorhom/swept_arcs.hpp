#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lorhom/homotopy_grid.hpp"
#include "lorhom/level_set.hpp"

namespace lorhom {

enum class ArcOutcome { ShortArc, LongArc, BothArcs, Degenerate, Inconclusive };

const char* to_string(ArcOutcome o);

/// Which of the two equator arcs between φ_lo and φ_hi the homotopy image
/// contains, up to grid resolution.
struct ArcCoverageReport {
  ArcOutcome outcome = ArcOutcome::Inconclusive;
  double azimuth_low = 0.0;
  double azimuth_high = 0.0;
  /// Covers (φ_lo, φ_hi), the arc not containing the seam.
  bool short_arc = false;
  /// Covers (φ_hi, φ_lo + 2π), the arc through the seam.
  bool long_arc = false;
  /// Range of the continuously lifted azimuth along the level component.
  double lifted_min = 0.0;
  double lifted_max = 0.0;
  /// Largest lifted step between adjacent component cells.
  double max_step = 0.0;
  double tolerance = 0.0;
  std::size_t component_cells = 0;
  /// Covered azimuth intervals, reduced to (−π, π].
  std::vector<std::pair<double, double>> covered;
  std::string note = "coverage holds up to grid resolution; arcs are open at the meridians";
};

/// F = polar ∘ H, θ = π/2 component, equator crossings lifted in azimuth
/// along the component. Requires φ_lo ≤ φ_hi; throws ResolutionTooCoarse
/// from the level-set step.
ArcCoverageReport swept_equator_arcs(const HomotopyGrid& h, double azimuth_low,
                                     double azimuth_high);

/// The polar-angle grid F(s, t) = θ(H(s, t)) on [s₀, s₁] × [0, π].
ScalarGrid polar_grid(const HomotopyGrid& h);

}  // namespace lorhom
