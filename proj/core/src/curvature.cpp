#include "lorhom/curvature.hpp"

#include <cmath>

namespace lorhom {

double gaussian_curvature(const ConformalFactorSpec& spec, const SpherePoint& p) {
  const FactorJet j = spec.jet(p);
  const double lap_u =
      j.laplacian / (2.0 * j.value) - j.gradient.squaredNorm() / (2.0 * j.value * j.value);
  return (1.0 - lap_u) / j.value;
}

Vec3 log_factor_gradient(const ConformalFactorSpec& spec, const SpherePoint& p) {
  const FactorJet j = spec.jet(p);
  return j.gradient / (2.0 * j.value);
}

double gaussian_curvature_fd(const ConformalFactorSpec& spec, const SpherePoint& p, double step) {
  const Vec3& x = p.position();
  Vec3 seed = std::abs(x.z()) < 0.9 ? Vec3(0.0, 0.0, 1.0) : Vec3(1.0, 0.0, 0.0);
  const Vec3 e1 = seed.cross(x).normalized();
  const Vec3 e2 = x.cross(e1);
  auto u = [&](double a, double b) {
    const Vec3 y = std::cos(b) * (std::cos(a) * x + std::sin(a) * e1) + std::sin(b) * e2;
    return 0.5 * std::log1p(spec.excess(SpherePoint(y)));
  };
  const double h = step;
  const double u0 = u(0.0, 0.0);
  auto second = [&](double fm2, double fm1, double fp1, double fp2) {
    return (-fp2 + 16.0 * fp1 - 30.0 * u0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
  };
  const double uaa = second(u(-2 * h, 0), u(-h, 0), u(h, 0), u(2 * h, 0));
  const double ubb = second(u(0, -2 * h), u(0, -h), u(0, h), u(0, 2 * h));
  return (1.0 - (uaa + ubb)) * std::exp(-2.0 * u0);
}

}  // namespace lorhom
