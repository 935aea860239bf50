#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lorhom/curve.hpp"
#include "lorhom/spacetime.hpp"

namespace lorhom {

/// Samples H(sᵢ, tⱼ) of a fixed-endpoint homotopy between two curves from
/// N to S (projection model; the spacetime model lifts each row with time t).
class HomotopyGrid {
 public:
  /// Throws MalformedGrid on size mismatch, non-increasing parameters,
  /// t not running over [0, π], rows not pinned to N and S, or antipodal
  /// neighbours inside a row.
  HomotopyGrid(std::vector<double> s_values, std::vector<double> t_values,
               std::vector<SpherePoint> points);

  std::size_t rows() const { return s_.size(); }
  std::size_t columns() const { return t_.size(); }
  const std::vector<double>& s_values() const { return s_; }
  const std::vector<double>& t_values() const { return t_; }
  const SpherePoint& at(std::size_t i, std::size_t j) const { return points_[i * t_.size() + j]; }
  SpherePoint& at(std::size_t i, std::size_t j) { return points_[i * t_.size() + j]; }
  const std::vector<SpherePoint>& points() const { return points_; }

  SphereCurve row(std::size_t i) const;
  SpacetimeCurve lifted_row(std::size_t i, const ConformalFactorSpec& factor) const;

 private:
  std::vector<double> s_;
  std::vector<double> t_;
  std::vector<SpherePoint> points_;
};

enum class Winding { Short, Long };

/// Rows are meridians with azimuth interpolated linearly in s from `from` to
/// `to`; the long winding goes around through the seam φ = ±π.
HomotopyGrid rotation_homotopy(double from, double to, Winding winding, int s_intervals = 64,
                               int t_intervals = 256);

/// Adds seeded smooth interior bumps ∝ sin(πs)·sin(kt) in the e_φ and e_θ
/// directions to every point; boundary rows and endpoints stay fixed.
HomotopyGrid perturb_homotopy(const HomotopyGrid& grid, std::uint64_t seed, double amplitude,
                              int modes = 3);

/// Azimuth-rotation homotopy between two lifted meridians (short way),
/// sampled with the lifts' own time samples. Requires distinct meridians.
HomotopyGrid topological_homotopy(const SpacetimeCurve& from, const SpacetimeCurve& to,
                                  int s_intervals = 64);

/// Azimuth of a curve's equator crossing, read from the sample nearest to
/// θ = π/2 (for lifts of meridians).
double meridian_azimuth_of(const SphereCurve& curve);

/// CSV with header i,j,s,t,x,y,z.
void write_homotopy_csv(std::ostream& os, const HomotopyGrid& grid);

}  // namespace lorhom
