#include "lorhom/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "lorhom/errors.hpp"

namespace lorhom {

SpacetimeCurve::SpacetimeCurve(std::vector<double> times, SphereCurve space,
                               ConformalFactorSpec factor, bool deformed)
    : times_(std::move(times)),
      space_(std::move(space)),
      factor_(std::move(factor)),
      deformed_(deformed) {
  if (times_.size() != space_.size()) throw InvalidArgument("SpacetimeCurve: size mismatch");
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) {
      throw InvalidArgument("SpacetimeCurve: time must be strictly increasing");
    }
  }
}

const char* to_string(CausalVerdict v) {
  switch (v) {
    case CausalVerdict::Timelike:
      return "timelike";
    case CausalVerdict::Lightlike:
      return "lightlike";
    case CausalVerdict::Causal:
      return "causal";
    case CausalVerdict::NonCausal:
      return "non-causal";
  }
  return "unknown";
}

SpacetimeCurve lift_azimuth(double azimuth, const ConformalFactorSpec& factor, int samples) {
  SphereCurve gamma = meridian(azimuth, samples);
  std::vector<double> t = gamma.params();
  return SpacetimeCurve(std::move(t), std::move(gamma), factor);
}

SpacetimeCurve lift_meridian(int n, const ConformalFactorSpec& factor, int samples) {
  if (n < 1 || n > factor.max_index()) {
    throw InvalidArgument("lift_meridian: index outside 1..N_max");
  }
  return lift_azimuth(meridian_azimuth(n), factor, samples);
}

SpacetimeCurve constant_curve(const SpherePoint& p, const ConformalFactorSpec& factor,
                              int samples) {
  std::vector<double> t(samples + 1);
  for (int i = 0; i <= samples; ++i) t[i] = kPi * i / samples;
  t.back() = kPi;
  std::vector<SpherePoint> pts(samples + 1, p);
  return SpacetimeCurve(t, SphereCurve(t, std::move(pts)), factor);
}

CausalClass classify(const SpacetimeCurve& curve, double tol) {
  const auto lens = segment_lengths(curve.factor(), curve.space());
  const auto& tau = curve.times();
  CausalClass out;
  out.ratios.resize(lens.size());
  out.worst_ratio = -1.0;
  out.min_ratio = std::numeric_limits<double>::infinity();
  double worst_excess = -std::numeric_limits<double>::infinity();
  SplitLength total;
  for (std::size_t k = 0; k < lens.size(); ++k) {
    const double dt = tau[k + 1] - tau[k];
    const double rel = ((lens[k].base - dt) + lens[k].surplus) / dt;
    out.ratios[k] = 1.0 + rel;
    out.max_deviation = std::max(out.max_deviation, std::abs(rel));
    if (rel > worst_excess) {
      worst_excess = rel;
      out.worst_segment = k;
    }
    out.min_ratio = std::min(out.min_ratio, out.ratios[k]);
    total += lens[k];
  }
  out.worst_ratio = 1.0 + worst_excess;
  out.slack = ((tau.back() - tau.front()) - total.base) - total.surplus;
  if (out.max_deviation <= tol) {
    out.verdict = CausalVerdict::Lightlike;
  } else if (worst_excess < -tol) {
    out.verdict = CausalVerdict::Timelike;
  } else if (worst_excess <= tol) {
    out.verdict = CausalVerdict::Causal;
  } else {
    out.verdict = CausalVerdict::NonCausal;
  }
  return out;
}

SpacetimeCurve deform_to_timelike(const SpacetimeCurve& curve) {
  const CausalClass cls = classify(curve);
  if (cls.verdict == CausalVerdict::NonCausal) {
    throw NoSlack("deform_to_timelike: curve is not causal");
  }
  if (!(cls.slack > 1e-9)) throw NoSlack("deform_to_timelike: no slack (L* >= span - 1e-9)");
  const auto lens = segment_lengths(curve.factor(), curve.space());
  const auto& t = curve.space().params();
  const auto& tau0 = curve.times();
  const double span = t.back() - t.front();
  std::vector<double> tau(curve.size());
  tau[0] = tau0.front();
  for (std::size_t k = 0; k < lens.size(); ++k) {
    tau[k + 1] = tau[k] + lens[k].total() + cls.slack * (t[k + 1] - t[k]) / span;
  }
  tau.back() = tau0.back();
  return SpacetimeCurve(std::move(tau), curve.space(), curve.factor(), true);
}

void write_spacetime_csv(std::ostream& os, const SpacetimeCurve& curve) {
  const CausalClass cls = classify(curve);
  const auto old = os.precision(17);
  os << "t,tau,x,y,z,ratio\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const SpherePoint& p = curve.space().point(i);
    const std::size_t seg = std::min(i, cls.ratios.size() - 1);
    os << curve.space().param(i) << ',' << curve.times()[i] << ',' << p.x() << ',' << p.y() << ','
       << p.z() << ',' << cls.ratios[seg] << '\n';
  }
  os.precision(old);
}

LimitCurveReport limit_curve_check(const std::vector<SpacetimeCurve>& sequence,
                                   const SpacetimeCurve& limit) {
  LimitCurveReport out;
  for (const auto& c : sequence) {
    if (c.times() != limit.times())
      throw InvalidArgument("limit_curve_check: curves must share the time samples");
    double d = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k)
      d = std::max(d, distance(c.space().point(k), limit.space().point(k)));
    if (!out.distances.empty() && d > out.distances.back()) out.monotone = false;
    out.distances.push_back(d);
  }
  out.limit = classify(limit);
  return out;
}

}  // namespace lorhom
