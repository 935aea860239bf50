#pragma once

#include <string>
#include <vector>

#include "lorhom/homotopy_grid.hpp"
#include "lorhom/mesh.hpp"
#include "lorhom/swept_arcs.hpp"

namespace lorhom {

/// Fixed equator scan set: 48 interior azimuths per gap (φₙ₊₁, φₙ),
/// n < N_max, the midpoints pₙ, and 256 uniform azimuths on (−π, π].
/// Independent of the mesh level so two levels compare the same points.
std::vector<double> certificate_scan_azimuths(int max_index);

/// A mesh with scan chains plus the reduced pole distances, so
/// e(p) = d⋆(N,p) + d⋆(p,S) − π is available for every scan azimuth.
class ExcessField {
 public:
  ExcessField(const ConformalFactorSpec& factor, int level);

  const GeodesicMesh& mesh() const { return mesh_; }
  int level() const { return mesh_.level(); }
  const std::vector<double>& azimuths() const { return azimuths_; }
  /// Excess at the equator vertex of the scan chain at this azimuth.
  double excess(double azimuth) const;
  /// Excess at an arbitrary mesh vertex.
  double vertex_excess(std::uint32_t v) const { return north_[v] + south_[v]; }

 private:
  GeodesicMesh mesh_;
  std::vector<double> azimuths_;
  std::vector<double> north_;
  std::vector<double> south_;
};

enum class ObstructionVerdict { Obstructed, NotObstructed, Inconclusive };

const char* to_string(ObstructionVerdict v);

struct ArcExcess {
  /// "short" is (φⱼ, φᵢ); "long" is its complement through the seam.
  std::string arc;
  double from = 0.0;
  double to = 0.0;
  double argmax_azimuth = 0.0;
  double max_excess = 0.0;
  double coarse_max_excess = 0.0;
  double refinement_error = 0.0;
  double scan_error = 0.0;
  double error_bar = 0.0;
  std::size_t scanned = 0;
};

struct ObstructionCertificate {
  int i = 0;
  int j = 0;
  int fine_level = 0;
  int coarse_level = 0;
  ArcExcess arcs[2];
  double margin = 0.0;
  double coarse_margin = 0.0;
  double error_bar = 0.0;
  ObstructionVerdict verdict = ObstructionVerdict::Inconclusive;
};

/// Exclusion half-width around the meridian φₙ inside scans.
double meridian_exclusion(int n, double coarse_spacing);

/// Certificate for the pair i < j ≤ N_max from two excess fields of the same
/// factor (coarse level first).
ObstructionCertificate obstruction_margin(int i, int j, const ExcessField& coarse,
                                          const ExcessField& fine);

/// Builds fields at `level − 1` and `level`, then certifies.
ObstructionCertificate obstruction_margin(const ConformalFactorSpec& factor, int i, int j,
                                          int level);

struct CausalVerification {
  std::size_t rows = 0;
  std::size_t violations = 0;
  /// First row (by s) whose check fails; −1 if none.
  long first_violation = -1;
  /// max over rows of L⋆(row) − π.
  double max_row_excess = 0.0;
  std::size_t max_row = 0;
  std::vector<double> row_excess;
  /// Rows count as violations above this excess: twice the larger boundary
  /// row excess (the lightlike meridians are exact only up to rounding of φₙ).
  double tolerance = 0.0;
  ArcCoverageReport arcs;
  bool arcs_available = false;
  bool inconsistency_alarm = false;
};

enum class VerificationModel { Projection, Spacetime };

/// Checks every row (L⋆ ≤ π + tolerance, or causal classification of the lift)
/// and runs the swept-arc detector on the grid. `alarm_certificate` (if given)
/// marks a grid between distinct meridians with zero violations as an
/// inconsistency when it certifies obstruction. Throws MalformedGrid if a
/// boundary row is not a meridian lift.
CausalVerification verify_causal_homotopy(const ConformalFactorSpec& factor,
                                          const HomotopyGrid& h,
                                          VerificationModel model = VerificationModel::Projection,
                                          const ObstructionCertificate* alarm_certificate = nullptr);

}  // namespace lorhom
