#include "lorhom/plot_data.hpp"

#include <algorithm>
#include <ostream>

#include "lorhom/errors.hpp"

namespace lorhom {

void write_factor_heatmap(std::ostream& os, const ConformalFactorSpec& spec, int polar_samples,
                          int azimuth_samples) {
  if (polar_samples < 2 || azimuth_samples < 1)
    throw InvalidArgument("heatmap needs at least 2 x 1 samples");
  const auto old = os.precision(17);
  os << "theta,phi,omega,excess\n";
  for (int i = 0; i < polar_samples; ++i) {
    const double theta = kPi * i / (polar_samples - 1);
    for (int j = 0; j < azimuth_samples; ++j) {
      const double phi = -kPi + 2.0 * kPi * (j + 0.5) / azimuth_samples;
      const SpherePoint p = SpherePoint::from_angles(theta, phi);
      os << theta << ',' << phi << ',' << spec.value(p) << ',' << spec.excess(p) << '\n';
    }
  }
  os.precision(old);
}

void write_excess_profile(std::ostream& os, const ExcessField& coarse, const ExcessField& fine) {
  std::vector<double> az = fine.azimuths();
  std::sort(az.begin(), az.end());
  const auto old = os.precision(17);
  os << "azimuth,excess,coarse_excess\n";
  for (double a : az) os << a << ',' << fine.excess(a) << ',' << coarse.excess(a) << '\n';
  os.precision(old);
}

void write_row_lengths(std::ostream& os, const std::vector<std::vector<double>>& s_values,
                       const std::vector<std::vector<double>>& row_excess) {
  if (s_values.size() != row_excess.size()) throw InvalidArgument("row data size mismatch");
  const auto old = os.precision(17);
  os << "grid,s,row_excess\n";
  for (std::size_t g = 0; g < s_values.size(); ++g) {
    if (s_values[g].size() != row_excess[g].size()) throw InvalidArgument("row data size mismatch");
    for (std::size_t i = 0; i < s_values[g].size(); ++i)
      os << g << ',' << s_values[g][i] << ',' << row_excess[g][i] << '\n';
  }
  os.precision(old);
}

}  // namespace lorhom
