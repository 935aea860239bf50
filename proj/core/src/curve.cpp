#include "lorhom/curve.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "lorhom/errors.hpp"
#include "lorhom/quadrature.hpp"

namespace lorhom {

namespace {

constexpr double kMaxPanel = 0.1;

}  // namespace

SphereCurve::SphereCurve(std::vector<double> params, std::vector<SpherePoint> points)
    : params_(std::move(params)), points_(std::move(points)) {
  if (params_.size() != points_.size()) throw InvalidArgument("SphereCurve: size mismatch");
  if (points_.size() < 2) throw InvalidArgument("SphereCurve: need at least two samples");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(params_[i] > params_[i - 1])) {
      throw InvalidArgument("SphereCurve: parameters must be strictly increasing");
    }
    if (distance(points_[i - 1], points_[i]) >= kPi - 1e-6) {
      throw InvalidArgument("SphereCurve: consecutive samples are (nearly) antipodal");
    }
  }
}

SphereCurve meridian(double azimuth, int samples) {
  if (samples < 2) throw InvalidArgument("meridian: need at least two segments");
  std::vector<double> t(samples + 1);
  std::vector<SpherePoint> pts(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    t[i] = kPi * i / samples;
    pts[i] = SpherePoint::from_angles(t[i], azimuth);
  }
  t[samples] = kPi;
  pts.front() = SpherePoint::north();
  pts.back() = SpherePoint::south();
  return SphereCurve(std::move(t), std::move(pts));
}

SphereCurve equator_arc(double from, double to, int samples) {
  if (samples < 1) throw InvalidArgument("equator_arc: need at least one segment");
  if (!(to > from)) throw InvalidArgument("equator_arc: need from < to");
  std::vector<double> t(samples + 1);
  std::vector<SpherePoint> pts(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    t[i] = i == samples ? to : from + (to - from) * i / samples;
    pts[i] = SpherePoint::on_equator(t[i]);
  }
  return SphereCurve(std::move(t), std::move(pts));
}

SplitLength segment_length(const ConformalFactorSpec& spec, const SpherePoint& a,
                           const SpherePoint& b, int order) {
  const double len = distance(a, b);
  if (spec.is_round() || len == 0.0) return {len, 0.0};
  double max_panel = kMaxPanel;
  for (const Dip& d : spec.dips()) {
    if (distance(a, d.center) < d.radius() + len) max_panel = std::min(max_panel, d.radius() / 4.0);
  }
  const int panels = std::max(1, static_cast<int>(std::ceil(len / max_panel)));
  const GaussRule& rule = gauss_legendre(order);

  const Vec3& u = a.position();
  Vec3 w = b.position() - u.dot(b.position()) * u;
  const double wn = w.norm();
  if (wn == 0.0) return {len, 0.0};
  w /= wn;

  double surplus = 0.0;
  const double h = len / panels;
  for (int k = 0; k < panels; ++k) {
    const double mid = (k + 0.5) * h;
    double acc = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double s = mid + 0.5 * h * rule.nodes[q];
      const SpherePoint x(std::cos(s) * u + std::sin(s) * w);
      acc += rule.weights[q] * spec.root_surplus(x);
    }
    surplus += 0.5 * h * acc;
  }
  const double c = spec.scale();
  if (c != 1.0 && spec.variant() == FactorVariant::Unit) return {len, (std::sqrt(c) - 1.0) * len};
  return {len, surplus};
}

std::vector<SplitLength> segment_lengths(const ConformalFactorSpec& spec, const SphereCurve& curve,
                                         int order) {
  std::vector<SplitLength> out;
  out.reserve(curve.segments());
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    out.push_back(segment_length(spec, curve.point(i), curve.point(i + 1), order));
  }
  return out;
}

SplitLength length_split(const ConformalFactorSpec& spec, const SphereCurve& curve, int order) {
  SplitLength total;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    total += segment_length(spec, curve.point(i), curve.point(i + 1), order);
  }
  return total;
}

double polar_detour(const SpherePoint& a, const SpherePoint& b, double len) {
  if (len < 0.0) len = distance(a, b);
  const double rise = b.polar() - a.polar();
  if (rise <= 0.0) return len - rise;
  const double ra = a.axis_distance();
  const double rb = b.axis_distance();
  if (ra == 0.0 || rb == 0.0) return 0.0;
  const double ax = a.x() / ra, ay = a.y() / ra;
  const double bx = b.x() / rb, by = b.y() / rb;
  if (std::abs(ax * by - ay * bx) <= 1e-14 && ax * bx + ay * by > 0.0) return 0.0;
  const double dx = ax - bx;
  const double dy = ay - by;
  const double s = ra * rb * 0.25 * (dx * dx + dy * dy) / std::sin(0.5 * (len + rise));
  return 2.0 * std::asin(std::min(1.0, s));
}

double polar_excess(const ConformalFactorSpec& spec, const SphereCurve& curve, int order) {
  double detours = 0.0;
  double surplus = 0.0;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const SplitLength l = segment_length(spec, curve.point(i), curve.point(i + 1), order);
    detours += polar_detour(curve.point(i), curve.point(i + 1), l.base);
    surplus += l.surplus;
  }
  return detours + surplus;
}

void write_curve_csv(std::ostream& os, const ConformalFactorSpec& spec, const SphereCurve& curve) {
  const auto old = os.precision(17);
  os << "t,x,y,z,theta,phi,omega\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const SpherePoint& p = curve.point(i);
    os << curve.param(i) << ',' << p.x() << ',' << p.y() << ',' << p.z() << ',' << p.polar() << ','
       << p.azimuth() << ',' << spec.value(p) << '\n';
  }
  os.precision(old);
}

}  // namespace lorhom
