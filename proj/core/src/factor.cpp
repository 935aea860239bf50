#include "lorhom/factor.hpp"

#include <algorithm>
#include <cmath>

#include "lorhom/errors.hpp"

namespace lorhom {

namespace detail {

namespace {

// ψ(x) = e^{-1/x} and its first two derivatives, x > 0.
Jet1 psi(double x) {
  const double v = std::exp(-1.0 / x);
  const double ix = 1.0 / x;
  return {v, v * ix * ix, v * (ix * ix * ix * ix - 2.0 * ix * ix * ix)};
}

// log of the smooth step, accurate where the step itself underflows.
double log_smooth_step(double y) {
  if (y <= 0.0) return -std::numeric_limits<double>::infinity();
  if (y >= 1.0) return 0.0;
  const double a = std::exp(-1.0 / y);
  const double b = std::exp(-1.0 / (1.0 - y));
  return -1.0 / y - std::log(a + b);
}

double log_plateau_bump(double x, double plateau, double support) {
  const double ax = std::abs(x);
  if (ax <= plateau) return 0.0;
  if (ax >= support) return -std::numeric_limits<double>::infinity();
  return log_smooth_step((support - ax) / (support - plateau));
}

}  // namespace

Jet1 smooth_step(double y) {
  if (y <= 0.0) return {0.0, 0.0, 0.0};
  if (y >= 1.0) return {1.0, 0.0, 0.0};
  const Jet1 a = psi(y);
  Jet1 b = psi(1.0 - y);
  b.d1 = -b.d1;
  const double d = a.v + b.v;
  const double d1 = a.d1 + b.d1;
  const double d2 = a.d2 + b.d2;
  const double s = a.v / d;
  const double s1 = (a.d1 - s * d1) / d;
  const double s2 = (a.d2 - 2.0 * s1 * d1 - s * d2) / d;
  return {s, s1, s2};
}

Jet1 plateau_bump(double x, double plateau, double support) {
  const double ax = std::abs(x);
  if (ax <= plateau) return {1.0, 0.0, 0.0};
  if (ax >= support) return {0.0, 0.0, 0.0};
  const double w = support - plateau;
  const Jet1 s = smooth_step((support - ax) / w);
  const double sign = x < 0.0 ? -1.0 : 1.0;
  return {s.v, -sign * s.d1 / w, s.d2 / (w * w)};
}

Jet1 azimuth_profile(double azimuth, const BaseFactorParams& params) {
  if (azimuth == 0.0) return {0.0, 0.0, 0.0};
  const Jet1 chi = plateau_bump(azimuth, params.cutoff_plateau, params.cutoff_support);
  if (chi.v == 0.0) return {0.0, 0.0, 0.0};
  const double w = 1.0 / azimuth;
  const double w2 = w * w;
  if (w2 > 740.0) return {0.0, 0.0, 0.0};
  const double e = std::exp(-w2);
  const double s = std::sin(w);
  const double c = std::cos(w);
  const double g = e * s * s;
  const double gw = e * (-2.0 * w * s * s + 2.0 * s * c);
  const double gww = e * ((4.0 * w2 - 2.0) * s * s - 8.0 * w * s * c + 2.0 * (c * c - s * s));
  const double g1 = -w2 * gw;
  const double g2 = w2 * w2 * gww + 2.0 * w2 * w * gw;
  return {g * chi.v, g1 * chi.v + g * chi.d1, g2 * chi.v + 2.0 * g1 * chi.d1 + g * chi.d2};
}

Jet1 polar_profile(double polar, const BaseFactorParams& params) {
  return plateau_bump(polar - kPi / 2.0, params.plateau_half_width, params.support_half_width);
}

Jet1 dip_profile(double x) {
  const double u = 1.0 - x * x;
  if (u <= 0.0) return {0.0, 0.0, 0.0};
  const double h = std::exp(1.0 - 1.0 / u);
  const double h1 = -2.0 * x * h / (u * u);
  const double h2 = -2.0 * h / (u * u) - 2.0 * x * h1 / (u * u) - 8.0 * x * x * h / (u * u * u);
  return {h, h1, h2};
}

}  // namespace detail

namespace {

void check_params(const BaseFactorParams& p) {
  if (!(p.plateau_half_width > 0.0 && p.plateau_half_width < p.support_half_width &&
        p.support_half_width < kPi / 2.0)) {
    throw InvalidArgument("base factor requires 0 < plateau < support < pi/2");
  }
  if (!(p.cutoff_plateau > 0.0 && p.cutoff_plateau < p.cutoff_support &&
        p.cutoff_support < kPi)) {
    throw InvalidArgument("azimuth cutoff requires 0 < plateau < support < pi");
  }
  if (p.max_index < 1) throw InvalidArgument("max_index must be positive");
}

}  // namespace

ConformalFactorSpec ConformalFactorSpec::unit() { return ConformalFactorSpec(); }

ConformalFactorSpec ConformalFactorSpec::base(const BaseFactorParams& params) {
  check_params(params);
  ConformalFactorSpec s;
  s.variant_ = FactorVariant::Base;
  s.params_ = params;
  s.band_sin_ = std::sin(params.support_half_width);
  return s;
}

ConformalFactorSpec ConformalFactorSpec::modified(const BaseFactorParams& params,
                                                  std::vector<Dip> dips) {
  ConformalFactorSpec s = base(params);
  s.variant_ = FactorVariant::Modified;
  for (const Dip& d : dips) {
    if (!(d.diameter > 0.0 && d.diameter < kPi / 2.0)) {
      throw InvalidArgument("dip diameter must lie in (0, pi/2)");
    }
    if (!(d.depth > 0.0 && d.depth < 1.0)) throw InvalidArgument("dip depth must lie in (0, 1)");
  }
  for (std::size_t i = 0; i < dips.size(); ++i) {
    for (std::size_t j = i + 1; j < dips.size(); ++j) {
      if (distance(dips[i].center, dips[j].center) <= dips[i].radius() + dips[j].radius()) {
        throw InvalidArgument("dip supports overlap");
      }
    }
  }
  s.dips_ = std::move(dips);
  return s;
}

ConformalFactorSpec ConformalFactorSpec::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidArgument("scale must be positive");
  ConformalFactorSpec s = *this;
  s.scale_ *= c;
  return s;
}

double ConformalFactorSpec::raw_excess(const SpherePoint& p) const {
  if (variant_ == FactorVariant::Unit) return 0.0;
  double e = 0.0;
  if (std::abs(p.z()) < band_sin_) {
    const detail::Jet1 f1 = detail::polar_profile(p.polar(), params_);
    if (f1.v != 0.0) e = f1.v * detail::azimuth_profile(p.azimuth(), params_).v;
  }
  for (const Dip& d : dips_) {
    const double dist = distance(p, d.center);
    const double r = d.radius();
    if (dist < r) e -= d.depth * detail::dip_profile(dist / r).v;
  }
  return e;
}

double ConformalFactorSpec::excess(const SpherePoint& p) const {
  const double e = raw_excess(p);
  if (scale_ == 1.0) return e;
  return (scale_ - 1.0) + scale_ * e;
}

double ConformalFactorSpec::root_surplus(const SpherePoint& p) const {
  const double e = excess(p);
  return e / (1.0 + std::sqrt(1.0 + e));
}

double ConformalFactorSpec::log_excess(const SpherePoint& p) const {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (variant_ == FactorVariant::Base && scale_ == 1.0) {
    const double phi = p.azimuth();
    if (phi == 0.0) return kNegInf;
    const double w = 1.0 / phi;
    const double s = std::abs(std::sin(w));
    if (s == 0.0) return kNegInf;
    return detail::log_plateau_bump(p.polar() - kPi / 2.0, params_.plateau_half_width,
                                    params_.support_half_width) +
           detail::log_plateau_bump(phi, params_.cutoff_plateau, params_.cutoff_support) -
           w * w + 2.0 * std::log(s);
  }
  const double e = excess(p);
  return e > 0.0 ? std::log(e) : kNegInf;
}

FactorJet ConformalFactorSpec::jet(const SpherePoint& p) const {
  FactorJet out;
  if (variant_ != FactorVariant::Unit) {
    const double theta = p.polar();
    const detail::Jet1 f1 = detail::polar_profile(theta, params_);
    if (f1.v != 0.0 || f1.d1 != 0.0) {
      const detail::Jet1 f2 = detail::azimuth_profile(p.azimuth(), params_);
      const double st = std::sin(theta);
      const double ct = std::cos(theta);
      const double e = f1.v * f2.v;
      const double et = f1.d1 * f2.v;
      const double ep = f1.v * f2.d1;
      const double ett = f1.d2 * f2.v;
      const double epp = f1.v * f2.d2;
      out.excess = e;
      out.gradient = et * polar_direction(p) + (ep / st) * azimuth_direction(p);
      out.laplacian = ett + (ct / st) * et + epp / (st * st);
    }
    for (const Dip& d : dips_) {
      const double dist = distance(p, d.center);
      const double r = d.radius();
      if (dist >= r) continue;
      const detail::Jet1 h = detail::dip_profile(dist / r);
      const double hd = h.d1 / r;
      const double hdd = h.d2 / (r * r);
      out.excess -= d.depth * h.v;
      if (dist > 1e-7) {
        const Vec3& x = p.position();
        const Vec3& q = d.center.position();
        const Vec3 grad_dist = -(q - x.dot(q) * x) / std::sin(dist);
        out.gradient -= d.depth * hd * grad_dist;
        out.laplacian -= d.depth * (hdd + hd * std::cos(dist) / std::sin(dist));
      } else {
        out.laplacian -= d.depth * 2.0 * hdd;
      }
    }
  }
  if (scale_ != 1.0) {
    out.excess = (scale_ - 1.0) + scale_ * out.excess;
    out.gradient *= scale_;
    out.laplacian *= scale_;
  }
  out.value = 1.0 + out.excess;
  return out;
}

double ConformalFactorSpec::min_dip_radius() const {
  double r = std::numeric_limits<double>::infinity();
  for (const Dip& d : dips_) r = std::min(r, d.radius());
  return r;
}

bool ConformalFactorSpec::operator==(const ConformalFactorSpec& o) const {
  auto same_params = [](const BaseFactorParams& a, const BaseFactorParams& b) {
    return a.plateau_half_width == b.plateau_half_width &&
           a.support_half_width == b.support_half_width && a.cutoff_plateau == b.cutoff_plateau &&
           a.cutoff_support == b.cutoff_support && a.max_index == b.max_index;
  };
  if (variant_ != o.variant_ || scale_ != o.scale_) return false;
  if (variant_ == FactorVariant::Unit) return true;
  if (!same_params(params_, o.params_) || dips_.size() != o.dips_.size()) return false;
  for (std::size_t i = 0; i < dips_.size(); ++i) {
    if (dips_[i].center.position() != o.dips_[i].center.position() ||
        dips_[i].diameter != o.dips_[i].diameter || dips_[i].depth != o.dips_[i].depth) {
      return false;
    }
  }
  return true;
}

bool FactorValidationReport::all_passed() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionCheck& c) { return c.passed; });
}

const ConditionCheck& FactorValidationReport::condition(const std::string& name) const {
  for (const ConditionCheck& c : conditions) {
    if (c.name == name) return c;
  }
  throw InvalidArgument("unknown condition " + name);
}

FactorValidationReport validate_factor(const ConformalFactorSpec& spec, int polar_samples,
                                       int azimuth_samples, double tolerance) {
  if (polar_samples < 256 || azimuth_samples < 512) {
    throw InvalidArgument("validation grid must be at least 256 x 512");
  }
  FactorValidationReport report;
  report.polar_samples = polar_samples;
  report.azimuth_samples = azimuth_samples;
  report.tolerance = tolerance;

  const BaseFactorParams& bp = spec.base_params();
  const double dphi = 2.0 * kPi / azimuth_samples;
  const double eps1 = bp.plateau_half_width;
  const double eps2 = bp.support_half_width;

  ConditionCheck a{"a", true, 0, 0, 0, 0.0};
  ConditionCheck b{"b", true, 0, 0, 0, 0.0};
  ConditionCheck c1{"c1", true, 0, 0, 0, 0.0};
  ConditionCheck c2{"c2", true, 0, 0, 0, std::numeric_limits<double>::infinity()};

  auto record = [](ConditionCheck& c, bool ok, double measure, bool larger_is_worse,
                   double theta, double phi) {
    ++c.checked;
    const bool worse = larger_is_worse ? measure > c.worst_value : measure < c.worst_value;
    if (!ok && c.passed) {
      c.passed = false;
      c.worst_value = measure;
      c.worst_polar = theta;
      c.worst_azimuth = phi;
    } else if (ok == c.passed && worse) {
      c.worst_value = measure;
      c.worst_polar = theta;
      c.worst_azimuth = phi;
    }
  };

  auto near_listed_meridian = [&](double phi) {
    for (int n = 1; n <= spec.max_index(); ++n) {
      if (std::abs(phi - meridian_azimuth(n)) <= dphi) return true;
    }
    return false;
  };

  for (int i = 0; i < polar_samples; ++i) {
    const double theta = kPi * i / (polar_samples - 1);
    const bool in_cap = std::abs(theta - kPi / 2.0) > eps2;
    const bool in_plateau = std::abs(theta - kPi / 2.0) < eps1;
    for (int j = 0; j < azimuth_samples; ++j) {
      const double phi = -kPi + dphi * (j + 1);
      const SpherePoint p = SpherePoint::from_angles(theta, phi);
      const double e = spec.excess(p);
      record(a, e >= -tolerance, -e, true, theta, phi);
      if (in_cap) record(c1, std::abs(e) <= tolerance, std::abs(e), true, theta, phi);
      if (in_plateau && phi > 0.0 && phi < kPi / 2.0 && !near_listed_meridian(phi)) {
        const double le = spec.log_excess(p);
        record(c2, le > -std::numeric_limits<double>::infinity(), le, false, theta, phi);
      }
    }
    for (int n = 1; n <= spec.max_index(); ++n) {
      const double phi = meridian_azimuth(n);
      const double e = spec.excess(SpherePoint::from_angles(theta, phi));
      record(b, std::abs(e) <= tolerance, std::abs(e), true, theta, phi);
    }
    const double es = spec.excess(SpherePoint::from_angles(theta, kPi));
    record(b, std::abs(es) <= tolerance, std::abs(es), true, theta, kPi);
  }
  for (const SpherePoint& pole : {SpherePoint::north(), SpherePoint::south()}) {
    const double e = spec.excess(pole);
    record(b, std::abs(e) <= tolerance, std::abs(e), true, pole.polar(), 0.0);
  }
  report.conditions = {a, b, c1, c2};
  return report;
}

}  // namespace lorhom
