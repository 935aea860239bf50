#include "lorhom/sphere.hpp"

#include <cmath>

#include "lorhom/errors.hpp"

namespace lorhom {

SpherePoint::SpherePoint() : p_(0.0, 0.0, 1.0) {}

SpherePoint::SpherePoint(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 1e-300) || !std::isfinite(n)) {
    throw InvalidArgument("SpherePoint: cannot normalize a zero or non-finite vector");
  }
  p_ = v / n;
}

SpherePoint SpherePoint::from_angles(double polar, double azimuth) {
  const double s = std::sin(polar);
  return SpherePoint(Vec3(s * std::cos(azimuth), s * std::sin(azimuth), std::cos(polar)));
}

double SpherePoint::polar() const { return std::atan2(axis_distance(), p_.z()); }

double SpherePoint::azimuth() const {
  if (axis_distance() == 0.0) return 0.0;
  return std::atan2(p_.y(), p_.x());
}

bool SpherePoint::on_seam(double tol) const {
  return p_.x() < 0.0 && std::abs(p_.y()) <= tol;
}

double distance(const SpherePoint& a, const SpherePoint& b) {
  const Vec3& u = a.position();
  const Vec3& v = b.position();
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double s) {
  const double angle = distance(a, b);
  if (angle < 1e-15) return a;
  const Vec3& u = a.position();
  const Vec3& v = b.position();
  const double sa = std::sin(angle);
  const Vec3 w = (std::sin((1.0 - s) * angle) / sa) * u + (std::sin(s * angle) / sa) * v;
  return SpherePoint(w);
}

Vec3 polar_direction(const SpherePoint& p) {
  const double r = p.axis_distance();
  if (r == 0.0) return Vec3(p.z() > 0.0 ? 1.0 : -1.0, 0.0, 0.0);
  const Vec3& x = p.position();
  return Vec3(x.z() * x.x() / r, x.z() * x.y() / r, -r);
}

Vec3 azimuth_direction(const SpherePoint& p) {
  const double r = p.axis_distance();
  if (r == 0.0) return Vec3(0.0, 1.0, 0.0);
  return Vec3(-p.y() / r, p.x() / r, 0.0);
}

SpherePoint exp_map(const SpherePoint& p, const Vec3& v) {
  const double a = v.norm();
  if (a < 1e-300) return p;
  return SpherePoint(std::cos(a) * p.position() + (std::sin(a) / a) * v);
}

double azimuth_step(double from, double to) {
  const double c = std::cos(from) * std::cos(to) + std::sin(from) * std::sin(to);
  const double s = std::cos(from) * std::sin(to) - std::sin(from) * std::cos(to);
  return std::atan2(s, c);
}

}  // namespace lorhom
