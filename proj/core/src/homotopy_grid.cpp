#include "lorhom/homotopy_grid.hpp"

#include <cmath>
#include <ostream>

#include "lorhom/errors.hpp"
#include "lorhom/random.hpp"

namespace lorhom {

HomotopyGrid::HomotopyGrid(std::vector<double> s_values, std::vector<double> t_values,
                           std::vector<SpherePoint> points)
    : s_(std::move(s_values)), t_(std::move(t_values)), points_(std::move(points)) {
  if (s_.size() < 2 || t_.size() < 2) throw MalformedGrid("homotopy grid needs 2x2 samples");
  if (points_.size() != s_.size() * t_.size()) throw MalformedGrid("homotopy grid size mismatch");
  for (std::size_t i = 1; i < s_.size(); ++i) {
    if (!(s_[i] > s_[i - 1])) throw MalformedGrid("s samples must increase");
  }
  for (std::size_t j = 1; j < t_.size(); ++j) {
    if (!(t_[j] > t_[j - 1])) throw MalformedGrid("t samples must increase");
  }
  if (t_.front() != 0.0 || t_.back() != kPi) throw MalformedGrid("t must run over [0, pi]");
  const SpherePoint n = SpherePoint::north();
  const SpherePoint s = SpherePoint::south();
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (distance(at(i, 0), n) > 1e-12 || distance(at(i, t_.size() - 1), s) > 1e-12) {
      throw MalformedGrid("every row must run from N to S");
    }
    for (std::size_t j = 1; j < t_.size(); ++j) {
      if (distance(at(i, j - 1), at(i, j)) >= kPi - 1e-6) {
        throw MalformedGrid("antipodal neighbours inside a row");
      }
    }
  }
}

SphereCurve HomotopyGrid::row(std::size_t i) const {
  std::vector<SpherePoint> pts(points_.begin() + static_cast<std::ptrdiff_t>(i * t_.size()),
                               points_.begin() + static_cast<std::ptrdiff_t>((i + 1) * t_.size()));
  return SphereCurve(t_, std::move(pts));
}

SpacetimeCurve HomotopyGrid::lifted_row(std::size_t i, const ConformalFactorSpec& factor) const {
  return SpacetimeCurve(t_, row(i), factor);
}

HomotopyGrid rotation_homotopy(double from, double to, Winding winding, int s_intervals,
                               int t_intervals) {
  if (s_intervals < 1 || t_intervals < 2) throw InvalidArgument("rotation_homotopy: grid too small");
  double sweep = to - from;
  if (winding == Winding::Long && sweep != 0.0) sweep -= std::copysign(2.0 * kPi, sweep);
  std::vector<double> s(s_intervals + 1);
  std::vector<double> t(t_intervals + 1);
  for (int i = 0; i <= s_intervals; ++i) s[i] = static_cast<double>(i) / s_intervals;
  for (int j = 0; j <= t_intervals; ++j) t[j] = kPi * j / t_intervals;
  t.back() = kPi;
  std::vector<SpherePoint> pts;
  pts.reserve(s.size() * t.size());
  for (int i = 0; i <= s_intervals; ++i) {
    const double phi = i == s_intervals ? to : from + sweep * s[i];
    for (int j = 0; j <= t_intervals; ++j) {
      if (j == 0) {
        pts.push_back(SpherePoint::north());
      } else if (j == t_intervals) {
        pts.push_back(SpherePoint::south());
      } else {
        pts.push_back(SpherePoint::from_angles(t[j], phi));
      }
    }
  }
  return HomotopyGrid(std::move(s), std::move(t), std::move(pts));
}

HomotopyGrid perturb_homotopy(const HomotopyGrid& grid, std::uint64_t seed, double amplitude,
                              int modes) {
  Rng rng(seed);
  std::vector<double> a(modes), b(modes);
  for (int k = 0; k < modes; ++k) {
    a[k] = rng.uniform(-1.0, 1.0) * amplitude / (k + 1);
    b[k] = rng.uniform(-1.0, 1.0) * amplitude / (k + 1);
  }
  std::vector<SpherePoint> pts = grid.points();
  const auto& s = grid.s_values();
  const auto& t = grid.t_values();
  const double s0 = s.front();
  const double ds = s.back() - s.front();
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const double w = std::sin(kPi * (s[i] - s0) / ds);
    for (std::size_t j = 1; j + 1 < t.size(); ++j) {
      double u = 0.0, v = 0.0;
      for (int k = 0; k < modes; ++k) {
        const double m = std::sin((k + 1) * t[j]);
        u += a[k] * m;
        v += b[k] * m;
      }
      SpherePoint& p = pts[i * t.size() + j];
      const Vec3 tangent = w * (u * azimuth_direction(p) + v * polar_direction(p));
      p = exp_map(p, tangent);
    }
  }
  return HomotopyGrid(s, t, std::move(pts));
}

double meridian_azimuth_of(const SphereCurve& curve) {
  std::size_t best = 0;
  double gap = kPi;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double g = std::abs(curve.point(i).polar() - kPi / 2.0);
    if (g < gap) {
      gap = g;
      best = i;
    }
  }
  return curve.point(best).azimuth();
}

HomotopyGrid topological_homotopy(const SpacetimeCurve& from, const SpacetimeCurve& to,
                                  int s_intervals) {
  const double a = meridian_azimuth_of(from.space());
  const double b = meridian_azimuth_of(to.space());
  if (a == b) throw InvalidArgument("topological_homotopy: curves coincide");
  const auto& times = from.times();
  if (times != to.times()) throw InvalidArgument("topological_homotopy: time samples differ");
  std::vector<double> s(s_intervals + 1);
  for (int i = 0; i <= s_intervals; ++i) s[i] = static_cast<double>(i) / s_intervals;
  std::vector<SpherePoint> pts;
  pts.reserve(s.size() * times.size());
  for (int i = 0; i <= s_intervals; ++i) {
    for (std::size_t j = 0; j < times.size(); ++j) {
      if (i == 0) {
        pts.push_back(from.space().point(j));
      } else if (i == s_intervals) {
        pts.push_back(to.space().point(j));
      } else if (j == 0) {
        pts.push_back(SpherePoint::north());
      } else if (j + 1 == times.size()) {
        pts.push_back(SpherePoint::south());
      } else {
        pts.push_back(SpherePoint::from_angles(times[j], a + (b - a) * s[i]));
      }
    }
  }
  return HomotopyGrid(std::move(s), times, std::move(pts));
}

void write_homotopy_csv(std::ostream& os, const HomotopyGrid& grid) {
  const auto old = os.precision(17);
  os << "i,j,s,t,x,y,z\n";
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    for (std::size_t j = 0; j < grid.columns(); ++j) {
      const SpherePoint& p = grid.at(i, j);
      os << i << ',' << j << ',' << grid.s_values()[i] << ',' << grid.t_values()[j] << ',' << p.x()
         << ',' << p.y() << ',' << p.z() << '\n';
    }
  }
  os.precision(old);
}

}  // namespace lorhom
