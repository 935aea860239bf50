#pragma once

#include <iosfwd>
#include <vector>

#include "lorhom/certifier.hpp"
#include "lorhom/factor.hpp"

namespace lorhom {

/// CSV theta,phi,omega,excess on θ = πi/(P−1), φ = −π + 2π(j+0.5)/A.
void write_factor_heatmap(std::ostream& os, const ConformalFactorSpec& spec, int polar_samples,
                          int azimuth_samples);

/// CSV azimuth,excess,coarse_excess over the scan azimuths shared by both
/// fields, sorted by azimuth.
void write_excess_profile(std::ostream& os, const ExcessField& coarse, const ExcessField& fine);

/// CSV grid,s,row_excess; one block per grid.
void write_row_lengths(std::ostream& os, const std::vector<std::vector<double>>& s_values,
                       const std::vector<std::vector<double>>& row_excess);

}  // namespace lorhom
