#include "lorhom/jacobi.hpp"

#include <array>
#include <cmath>
#include <limits>

#include <boost/numeric/odeint.hpp>

#include "lorhom/curvature.hpp"
#include "lorhom/errors.hpp"

namespace lorhom {

namespace {

using State = std::array<double, 8>;

struct GeodesicJacobi {
  const ConformalFactorSpec& spec;

  void operator()(const State& s, State& ds, double /*t*/) const {
    const Vec3 x(s[0], s[1], s[2]);
    const Vec3 v(s[3], s[4], s[5]);
    const SpherePoint p(x);
    const FactorJet j = spec.jet(p);
    const Vec3 gu = j.gradient / (2.0 * j.value);
    const double lap_u =
        j.laplacian / (2.0 * j.value) - j.gradient.squaredNorm() / (2.0 * j.value * j.value);
    const double k = (1.0 - lap_u) / j.value;
    const double vv = v.squaredNorm();
    const Vec3 a = -vv * x - 2.0 * gu.dot(v) * v + vv * gu;
    ds[0] = v.x();
    ds[1] = v.y();
    ds[2] = v.z();
    ds[3] = a.x();
    ds[4] = a.y();
    ds[5] = a.z();
    ds[6] = s[7];
    ds[7] = -k * s[6];
  }
};

}  // namespace

std::optional<double> conjugate_point(const ConformalFactorSpec& spec, const SpherePoint& start,
                                      const Vec3& direction, double max_length,
                                      const ConjugateOptions& options) {
  namespace odeint = boost::numeric::odeint;
  const Vec3& x0 = start.position();
  Vec3 d = direction - direction.dot(x0) * x0;
  if (d.norm() < 1e-12) throw InvalidArgument("conjugate_point: direction must be tangent");
  d = d.normalized() / std::sqrt(spec.value(start));

  State s{x0.x(), x0.y(), x0.z(), d.x(), d.y(), d.z(), 0.0, 1.0};
  GeodesicJacobi sys{spec};
  auto stepper = odeint::make_dense_output(options.tolerance, options.tolerance,
                                           odeint::runge_kutta_dopri5<State>());
  stepper.initialize(s, 0.0, options.initial_step);
  double prev_t = 0.0;
  double prev_j = 0.0;
  while (stepper.current_time() < max_length) {
    const auto [t0, t1] = stepper.do_step(sys);
    (void)t0;
    if (stepper.current_time_step() < options.min_step) {
      throw IntegratorFailure("conjugate_point: step size underflow");
    }
    const double j = stepper.current_state()[6];
    if (!std::isfinite(j)) throw IntegratorFailure("conjugate_point: non-finite state");
    if (prev_t > 0.0 && prev_j > 0.0 && j <= 0.0) {
      double lo = prev_t;
      double hi = t1;
      State tmp;
      for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        stepper.calc_state(mid, tmp);
        if (tmp[6] > 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      const double zero = 0.5 * (lo + hi);
      if (zero > max_length) return std::nullopt;
      return zero;
    }
    prev_t = t1;
    prev_j = j;
  }
  return std::nullopt;
}

double meridian_geodesic_residual(const ConformalFactorSpec& spec, double azimuth, int samples) {
  double worst = 0.0;
  for (int i = 1; i < samples; ++i) {
    const SpherePoint p = SpherePoint::from_angles(kPi * i / samples, azimuth);
    worst = std::max(worst, std::abs(log_factor_gradient(spec, p).dot(azimuth_direction(p))));
  }
  return worst;
}

CutPointReport cut_point(const ConformalFactorSpec& spec, double azimuth,
                         const GeodesicMesh& mesh) {
  CutPointReport report;
  report.azimuth = azimuth;
  report.geodesic_residual = meridian_geodesic_residual(spec, azimuth);
  if (report.geodesic_residual > 1e-6) {
    throw InvalidArgument("cut_point: meridian is not a geodesic of the factor");
  }
  const auto chain = mesh.chain_vertices(azimuth);
  if (!chain) throw InvalidArgument("cut_point: mesh has no chain along this meridian");
  const std::vector<double> reduced = mesh.reduced_distances(Pole::North);

  const auto& c = *chain;
  std::vector<double> along(c.size(), 0.0);
  for (std::size_t k = 1; k < c.size(); ++k) {
    const std::uint32_t u = c[k - 1];
    const std::uint32_t v = c[k];
    double step = std::numeric_limits<double>::quiet_NaN();
    for (auto a = mesh.neighbours_begin(u); a != mesh.neighbours_end(u); ++a) {
      if (a->vertex == v) {
        step = mesh.detour(a->edge, u, Pole::North) + mesh.edge_weight(a->edge).surplus;
        break;
      }
    }
    along[k] = along[k - 1] + step;
  }
  report.tolerance = 2.0 * 64.0 * std::numeric_limits<double>::epsilon() * kPi;
  for (std::size_t k = 1; k < c.size(); ++k) {
    const double defect = along[k] - reduced[c[k]];
    report.max_defect = std::max(report.max_defect, defect);
    if (report.minimizing_to_end && defect > report.tolerance) {
      report.minimizing_to_end = false;
      const double s = mesh.vertex(c[k]).polar() + along[k];
      report.cut_distance = s - 0.5 * defect;
    }
  }
  return report;
}

}  // namespace lorhom
