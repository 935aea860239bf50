#include "lorhom/timelike.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lorhom/errors.hpp"

namespace lorhom {

namespace {

constexpr double kDecrease = 1.0 - 0x1p-20;
constexpr int kCapRings = 8;
constexpr int kCapRays = 32;

SpherePoint excess_point(int n) { return SpherePoint::on_equator(midpoint_azimuth(n)); }
SpherePoint dip_point(int n) { return SpherePoint::on_equator(meridian_azimuth(n)); }

// Minimum of Ω − 1 over the centre and kCapRings × kCapRays points of the
// cap of radius r.
double cap_min_excess(const ConformalFactorSpec& f, const SpherePoint& c, double r) {
  double lo = f.excess(c);
  const Vec3 e1 = polar_direction(c);
  const Vec3 e2 = azimuth_direction(c);
  for (int k = 1; k <= kCapRings; ++k) {
    const double rho = r * k / kCapRings;
    for (int a = 0; a < kCapRays; ++a) {
      const double ang = 2.0 * kPi * a / kCapRays;
      lo = std::min(lo, f.excess(exp_map(c, rho * (std::cos(ang) * e1 + std::sin(ang) * e2))));
    }
  }
  return lo;
}

void cumulative_decrease(std::vector<double>& v) {
  for (std::size_t k = 1; k < v.size(); ++k) v[k] = std::min(v[k], v[k - 1] * kDecrease);
}

double detour_gap(const TimelikeParamSet& s, int m) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& p : s.p) d = std::min(d, distance(s.q[m], p));
  return d - s.epsilon[m];
}

}  // namespace

const char* to_string(DipRule r) {
  return r == DipRule::DetourBound ? "detour-bound" : "crossing-budget";
}

ExcessNeighbourhood derive_excess(const ConformalFactorSpec& factor, int n) {
  if (factor.variant() == FactorVariant::Unit)
    throw InvalidArgument("derive_excess: the unit factor has no excess");
  if (n < 1 || n > factor.max_index() - 1)
    throw InvalidArgument("derive_excess: index out of range 1..N_max-1");
  const SpherePoint p = excess_point(n);
  const double e = factor.excess(p);
  if (!(e > 0.0)) throw InvalidArgument("derive_excess: Omega(p_n) - 1 is not positive");
  ExcessNeighbourhood out;
  out.n = n;
  out.mu = 0.5 * e;
  const double rmax = 0.25 * (meridian_azimuth(n) - meridian_azimuth(n + 1));
  double r = rmax;
  if (!(cap_min_excess(factor, p, rmax) > out.mu)) {
    double lo = 0.0, hi = rmax;
    for (int it = 0; it < 48; ++it) {
      const double mid = 0.5 * (lo + hi);
      (cap_min_excess(factor, p, mid) > out.mu ? lo : hi) = mid;
    }
    r = lo;
  }
  if (!(r > 0.0)) throw InvalidArgument("derive_excess: no cap with excess above mu");
  out.delta = 2.0 * r;
  return out;
}

std::vector<std::string> TimelikeParamSet::violations() const {
  std::vector<std::string> out;
  auto flag = [&](const std::string& what, int a, int b = 0) {
    std::ostringstream os;
    os << what << " n=" << a;
    if (b) os << " m=" << b;
    out.push_back(os.str());
  };
  const int ne = static_cast<int>(mu.size());
  const int nd = static_cast<int>(nu.size());
  if (nd != max_index || ne != max_index - 1 || static_cast<int>(delta.size()) != ne ||
      static_cast<int>(epsilon.size()) != nd || static_cast<int>(p.size()) != ne ||
      static_cast<int>(q.size()) != nd) {
    out.push_back("size mismatch");
    return out;
  }
  for (int k = 0; k < ne; ++k) {
    if (!(mu[k] > 0.0)) flag("mu not positive", k + 1);
    if (!(delta[k] > 0.0)) flag("delta not positive", k + 1);
    if (k > 0 && !(mu[k] < mu[k - 1])) flag("mu not strictly decreasing", k + 1);
    if (k > 0 && !(delta[k] < delta[k - 1])) flag("delta not strictly decreasing", k + 1);
  }
  for (int k = 0; k < nd; ++k) {
    if (!(nu[k] > 0.0 && nu[k] < 1.0)) flag("nu outside (0,1)", k + 1);
    if (!(epsilon[k] > 0.0)) flag("epsilon not positive", k + 1);
    if (k > 0 && !(nu[k] < nu[k - 1])) flag("nu not strictly decreasing", k + 1);
    if (k > 0 && !(epsilon[k] < epsilon[k - 1])) flag("epsilon not strictly decreasing", k + 1);
  }
  for (int m = 0; m < nd; ++m) {
    for (int k = 0; k < ne; ++k) {
      const double d = distance(q[m], p[k]);
      if (!(d > 0.5 * epsilon[m] + 0.5 * delta[k])) flag("V meets U", m + 1, k + 1);
    }
    for (int j = m + 1; j < nd; ++j) {
      const double gap = distance(q[m], q[j]) - 0.5 * (epsilon[m] + epsilon[j]);
      if (!(gap > 0.0)) flag("V closures overlap", m + 1, j + 1);
      else if (!(gap >= 4.0 * std::max(epsilon[m], epsilon[j])))
        flag("V separation below 4 max(eps)", m + 1, j + 1);
    }
    if (!(nu[m] > 0.0 && nu[m] < 1.0) || !(epsilon[m] > 0.0)) continue;
    if (rule == DipRule::DetourBound) {
      const double D = detour_gap(*this, m);
      if (!(D > 0.0) || !((1.0 - nu[m]) * (kPi + D) * (kPi + D) > kPi * kPi))
        flag("detour-bound inequality fails", m + 1);
    } else {
      for (int k : {m - 1, m + 1}) {
        if (k < 0 || k >= ne) continue;
        const double budget = 0.25 * std::expm1(0.5 * std::log1p(mu[k])) * delta[k];
        if (!(2.0 * epsilon[m] * nu[m] <= budget)) flag("crossing-budget inequality fails", m + 1, k + 1);
      }
    }
  }
  return out;
}

void TimelikeParamSet::validate() const {
  const auto v = violations();
  if (v.empty()) return;
  std::string msg = "timelike params violate invariants:";
  for (const auto& s : v) msg += " [" + s + "]";
  throw InvalidArgument(msg);
}

TimelikeParamSet make_param_set(int max_index, DipRule rule, std::vector<double> mu,
                                std::vector<double> delta, std::vector<double> nu,
                                std::vector<double> epsilon) {
  if (max_index < 2) throw InvalidArgument("make_param_set: max_index must be >= 2");
  TimelikeParamSet s;
  s.max_index = max_index;
  s.rule = rule;
  s.mu = std::move(mu);
  s.delta = std::move(delta);
  s.nu = std::move(nu);
  s.epsilon = std::move(epsilon);
  for (int n = 1; n < max_index; ++n) s.p.push_back(excess_point(n));
  for (int n = 1; n <= max_index; ++n) s.q.push_back(dip_point(n));
  s.validate();
  return s;
}

TimelikeParamSet choose_dips(const std::vector<ExcessNeighbourhood>& excesses, int max_index,
                             DipRule rule) {
  if (max_index < 2) throw InvalidArgument("choose_dips: max_index must be >= 2");
  if (static_cast<int>(excesses.size()) != max_index - 1)
    throw InvalidArgument("choose_dips: need excesses for n = 1..N_max-1");
  TimelikeParamSet s;
  s.max_index = max_index;
  s.rule = rule;
  for (int k = 0; k < max_index - 1; ++k) {
    if (excesses[k].n != k + 1) throw InvalidArgument("choose_dips: excesses out of order");
    s.mu.push_back(excesses[k].mu);
    s.delta.push_back(excesses[k].delta);
    s.p.push_back(excess_point(k + 1));
  }
  cumulative_decrease(s.delta);
  for (int n = 1; n <= max_index; ++n) s.q.push_back(dip_point(n));

  for (int n = 1; n <= max_index; ++n) {
    const double phi = meridian_azimuth(n);
    double sep = meridian_azimuth(n) - meridian_azimuth(n + 1);
    if (n > 1) sep = std::min(sep, meridian_azimuth(n - 1) - phi);
    sep = std::min(sep, phi);  // the meridian φ = 0
    double ubound = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < s.p.size(); ++k)
      ubound = std::min(ubound, distance(s.q[n - 1], s.p[k]) - 0.5 * s.delta[k]);
    s.epsilon.push_back(std::min(sep, ubound) / 8.0);
  }
  cumulative_decrease(s.epsilon);

  for (int m = 0; m < max_index; ++m) {
    double nu = 0.5;
    if (rule == DipRule::DetourBound) {
      const double D = detour_gap(s, m);
      const double r = kPi / (kPi + D);
      nu = std::min(0.5, 0.9 * (1.0 - r * r));
    } else {
      for (int k : {m - 1, m + 1}) {
        if (k < 0 || k >= max_index - 1) continue;
        const double budget = 0.25 * std::expm1(0.5 * std::log1p(s.mu[k])) * s.delta[k];
        nu = std::min(nu, 0.5 * budget / (2.0 * s.epsilon[m]));
      }
    }
    s.nu.push_back(nu);
  }
  cumulative_decrease(s.nu);
  s.validate();
  return s;
}

std::vector<std::string> sample_excess_violations(const ConformalFactorSpec& base,
                                                  const TimelikeParamSet& params) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < params.mu.size(); ++k) {
    if (!(cap_min_excess(base, params.p[k], 0.5 * params.delta[k]) >= params.mu[k]))
      out.push_back("Omega below 1+mu on U n=" + std::to_string(k + 1));
  }
  return out;
}

ConformalFactorSpec build_modified_factor(const ConformalFactorSpec& base,
                                          const TimelikeParamSet& params) {
  if (base.variant() != FactorVariant::Base)
    throw InvalidArgument("build_modified_factor: needs the base factor");
  params.validate();
  BaseFactorParams bp = base.base_params();
  bp.max_index = params.max_index;
  std::vector<Dip> dips;
  for (int k = 0; k < params.max_index; ++k)
    dips.push_back(Dip{params.q[k], params.epsilon[k], params.nu[k]});
  return ConformalFactorSpec::modified(bp, std::move(dips));
}

TimelikePipeline build_timelike_pipeline(int max_index, DipRule rule, BaseFactorParams shape) {
  shape.max_index = max_index;
  auto base = ConformalFactorSpec::base(shape);
  std::vector<ExcessNeighbourhood> ex;
  for (int n = 1; n < max_index; ++n) ex.push_back(derive_excess(base, n));
  auto params = choose_dips(ex, max_index, rule);
  auto modified = build_modified_factor(base, params);
  return {base, params, modified};
}

std::vector<Claim32Entry> validate_claim32(const TimelikeParamSet& params,
                                           const ExcessField& coarse, const ExcessField& fine,
                                           int up_to) {
  std::vector<Claim32Entry> out;
  const int last = std::min(params.max_index - 1, up_to);
  for (int n = 1; n <= last; ++n) {
    Claim32Entry e;
    e.n = n;
    e.excess = fine.excess(midpoint_azimuth(n));
    e.coarse_excess = coarse.excess(midpoint_azimuth(n));
    e.error_bar = std::abs(e.excess - e.coarse_excess);
    e.negative = e.excess < -e.error_bar;
    e.validated = e.excess > e.error_bar;
    e.inconclusive = !e.validated && !e.negative;
    out.push_back(e);
  }
  return out;
}

}  // namespace lorhom
