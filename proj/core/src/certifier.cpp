#include "lorhom/certifier.hpp"

#include <algorithm>
#include <cmath>

#include "lorhom/errors.hpp"

namespace lorhom {

namespace {

constexpr int kScanPerGap = 48;
constexpr int kScanUniform = 256;

double wrap_from(double phi, double origin) {
  double d = std::fmod(phi - origin, 2.0 * kPi);
  if (d < 0.0) d += 2.0 * kPi;
  return d;
}

}  // namespace

std::vector<double> certificate_scan_azimuths(int max_index) {
  std::vector<double> out;
  for (int n = 1; n < max_index; ++n) {
    const double lo = meridian_azimuth(n + 1);
    const double gap = meridian_azimuth(n) - lo;
    for (int k = 0; k < kScanPerGap; ++k) out.push_back(lo + gap * (k + 0.5) / kScanPerGap);
  }
  for (int n = 1; n <= max_index; ++n) out.push_back(midpoint_azimuth(n));
  for (int k = 0; k < kScanUniform; ++k) {
    out.push_back(-kPi + 2.0 * kPi * (k + 0.5) / kScanUniform);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExcessField::ExcessField(const ConformalFactorSpec& factor, int level)
    : mesh_([&] {
        MeshOptions opt;
        opt.scan_azimuths = certificate_scan_azimuths(factor.max_index());
        return build_mesh(factor, level, opt);
      }()),
      azimuths_(certificate_scan_azimuths(factor.max_index())),
      north_(mesh_.reduced_distances(Pole::North)),
      south_(mesh_.reduced_distances(Pole::South)) {}

double ExcessField::excess(double azimuth) const {
  const auto v = mesh_.equator_vertex(azimuth);
  if (!v) throw InvalidArgument("ExcessField: azimuth is not in the scan set");
  return vertex_excess(*v);
}

const char* to_string(ObstructionVerdict v) {
  switch (v) {
    case ObstructionVerdict::Obstructed:
      return "obstructed";
    case ObstructionVerdict::NotObstructed:
      return "not-obstructed";
    case ObstructionVerdict::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

double meridian_exclusion(int n, double coarse_spacing) {
  double gap = meridian_azimuth(n) - meridian_azimuth(n + 1);
  if (n > 1) gap = std::min(gap, meridian_azimuth(n - 1) - meridian_azimuth(n));
  return std::min(coarse_spacing, gap / 8.0);
}

namespace {

ArcExcess scan_arc(const std::string& name, double from, double to, const ExcessField& coarse,
                   const ExcessField& fine, int max_index) {
  ArcExcess arc;
  arc.arc = name;
  arc.from = from;
  arc.to = to;
  const double span = wrap_from(to, from);
  const double h = coarse.mesh().spacing();
  std::vector<std::pair<double, double>> pts;
  for (double phi : fine.azimuths()) {
    const double off = wrap_from(phi, from);
    if (!(off > 0.0 && off < span)) continue;
    bool excluded = false;
    for (int n = 1; n <= max_index && !excluded; ++n) {
      excluded = std::abs(phi - meridian_azimuth(n)) < meridian_exclusion(n, h);
    }
    if (!excluded) pts.emplace_back(off, phi);
  }
  std::sort(pts.begin(), pts.end());
  arc.scanned = pts.size();
  if (pts.empty()) {
    arc.max_excess = arc.coarse_max_excess = -std::numeric_limits<double>::infinity();
    return arc;
  }
  std::vector<double> ef(pts.size()), ec(pts.size());
  std::size_t best = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    ef[k] = fine.excess(pts[k].second);
    ec[k] = coarse.excess(pts[k].second);
    if (ef[k] > ef[best]) best = k;
  }
  arc.argmax_azimuth = pts[best].second;
  arc.max_excess = ef[best];
  arc.coarse_max_excess = *std::max_element(ec.begin(), ec.end());
  arc.refinement_error = std::abs(arc.max_excess - arc.coarse_max_excess);
  if (best > 0) arc.scan_error = std::max(arc.scan_error, ef[best] - ef[best - 1]);
  if (best + 1 < pts.size()) arc.scan_error = std::max(arc.scan_error, ef[best] - ef[best + 1]);
  arc.error_bar = std::max(arc.refinement_error, arc.scan_error);
  return arc;
}

}  // namespace

ObstructionCertificate obstruction_margin(int i, int j, const ExcessField& coarse,
                                          const ExcessField& fine) {
  const ConformalFactorSpec& f = fine.mesh().factor();
  if (!(coarse.mesh().factor() == f)) {
    throw InvalidArgument("obstruction_margin: meshes built from different factors");
  }
  if (!(1 <= i && i < j && j <= f.max_index())) {
    throw InvalidArgument("obstruction_margin: need 1 <= i < j <= N_max");
  }
  ObstructionCertificate c;
  c.i = i;
  c.j = j;
  c.fine_level = fine.level();
  c.coarse_level = coarse.level();
  const double lo = meridian_azimuth(j);
  const double hi = meridian_azimuth(i);
  c.arcs[0] = scan_arc("short", lo, hi, coarse, fine, f.max_index());
  c.arcs[1] = scan_arc("long", hi, lo, coarse, fine, f.max_index());
  const int m = c.arcs[0].max_excess <= c.arcs[1].max_excess ? 0 : 1;
  c.margin = c.arcs[m].max_excess;
  c.error_bar = c.arcs[m].error_bar;
  c.coarse_margin = std::min(c.arcs[0].coarse_max_excess, c.arcs[1].coarse_max_excess);
  const bool both = c.arcs[0].max_excess > c.arcs[0].error_bar &&
                    c.arcs[1].max_excess > c.arcs[1].error_bar;
  if (both) {
    c.verdict = ObstructionVerdict::Obstructed;
  } else if (c.margin <= 0.0 || c.margin < -c.error_bar) {
    c.verdict = ObstructionVerdict::NotObstructed;
  } else {
    c.verdict = ObstructionVerdict::Inconclusive;
  }
  return c;
}

ObstructionCertificate obstruction_margin(const ConformalFactorSpec& factor, int i, int j,
                                          int level) {
  if (level < 1) throw InvalidArgument("obstruction_margin: level must be at least 1");
  const ExcessField coarse(factor, level - 1);
  const ExcessField fine(factor, level);
  return obstruction_margin(i, j, coarse, fine);
}

namespace {

void require_meridian_row(const HomotopyGrid& h, std::size_t i) {
  double phi = 0.0;
  bool have = false;
  for (std::size_t j = 1; j + 1 < h.columns(); ++j) {
    const SpherePoint& p = h.at(i, j);
    if (std::abs(p.polar() - h.t_values()[j]) > 1e-9) {
      throw MalformedGrid("boundary row is not an arclength meridian lift");
    }
    if (!have) {
      phi = p.azimuth();
      have = true;
    } else if (std::abs(azimuth_step(phi, p.azimuth())) > 1e-9) {
      throw MalformedGrid("boundary row is not a meridian");
    }
  }
}

}  // namespace

CausalVerification verify_causal_homotopy(const ConformalFactorSpec& factor,
                                          const HomotopyGrid& h, VerificationModel model,
                                          const ObstructionCertificate* alarm_certificate) {
  require_meridian_row(h, 0);
  require_meridian_row(h, h.rows() - 1);
  CausalVerification v;
  v.rows = h.rows();
  v.row_excess.resize(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) v.row_excess[i] = polar_excess(factor, h.row(i));
  v.tolerance = 2.0 * std::max({v.row_excess.front(), v.row_excess.back(), 0.0});
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (v.row_excess[i] > v.max_row_excess || i == 0) {
      v.max_row_excess = v.row_excess[i];
      v.max_row = i;
    }
    bool bad = false;
    if (model == VerificationModel::Projection) {
      bad = v.row_excess[i] > v.tolerance;
    } else {
      bad = classify(h.lifted_row(i, factor)).verdict == CausalVerdict::NonCausal;
    }
    if (bad) {
      ++v.violations;
      if (v.first_violation < 0) v.first_violation = static_cast<long>(i);
    }
  }
  const double a = meridian_azimuth_of(h.row(0));
  const double b = meridian_azimuth_of(h.row(h.rows() - 1));
  try {
    v.arcs = swept_equator_arcs(h, std::min(a, b), std::max(a, b));
    v.arcs_available = true;
  } catch (const ResolutionTooCoarse&) {
    v.arcs_available = false;
  }
  if (alarm_certificate && alarm_certificate->verdict == ObstructionVerdict::Obstructed &&
      a != b && v.violations == 0) {
    v.inconsistency_alarm = true;
  }
  return v;
}

}  // namespace lorhom
