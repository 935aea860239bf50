#pragma once

#include <cstdint>

#include "lorhom/homotopy_grid.hpp"
#include "lorhom/spacetime.hpp"

namespace lorhom {

struct AdversaryOptions {
  int s_intervals = 64;
  int t_intervals = 256;
  int iterations = 5000;
  /// Sine modes per displacement component (e_φ, e_θ) and row.
  int modes = 6;
  double initial_step = 0.02;
  double min_step = 1e-6;
  double smoothness_weight = 1e-9;
  /// Restart temperature relative to the current residual.
  double temperature = 0.05;
  int restart_every = 500;
  std::uint64_t seed = 1;
};

struct AdversaryResult {
  HomotopyGrid best;
  double residual = 0.0;
  double initial_residual = 0.0;
  int iterations = 0;
  bool exhausted = false;
  /// Largest pointwise g₀ distance allowed between adjacent rows.
  double continuity_bound = 0.0;
  std::vector<double> row_excess;
};

/// Searches for a causal homotopy between two lifted meridians by moving the
/// interior rows of an azimuth-rotation grid: coordinate-wise finite-difference
/// descent on the worst row, seeded annealing restarts, smoothness penalty,
/// and a hard continuity constraint between adjacent rows. The residual is
/// max(0, max_s L⋆(α_s) − π − floor) with floor the larger boundary excess.
AdversaryResult attempt_causal_homotopy(const ConformalFactorSpec& factor,
                                        const SpacetimeCurve& from, const SpacetimeCurve& to,
                                        const AdversaryOptions& options = {});

}  // namespace lorhom
