#include "lorhom/swept_arcs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "lorhom/errors.hpp"

namespace lorhom {

const char* to_string(ArcOutcome o) {
  switch (o) {
    case ArcOutcome::ShortArc:
      return "short-arc";
    case ArcOutcome::LongArc:
      return "long-arc";
    case ArcOutcome::BothArcs:
      return "both-arcs";
    case ArcOutcome::Degenerate:
      return "degenerate";
    case ArcOutcome::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

ScalarGrid polar_grid(const HomotopyGrid& h) {
  const int S = static_cast<int>(h.rows()) - 1;
  const int T = static_cast<int>(h.columns()) - 1;
  std::vector<double> v(h.rows() * h.columns());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.columns(); ++j) v[i * h.columns() + j] = h.at(i, j).polar();
  }
  return ScalarGrid(S, T, h.s_values().front(), h.s_values().back(), 0.0, kPi, std::move(v), 0.0,
                    kPi);
}

namespace {

// Equator crossing of the cell: interpolated on a straddling edge of the
// 3-vectors, else the corner nearest the equator.
Vec3 crossing_point(const HomotopyGrid& h, int i, int j) {
  const std::pair<int, int> c[4] = {{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}};
  for (int k = 0; k < 4; ++k) {
    const SpherePoint& p = h.at(c[k].first, c[k].second);
    const SpherePoint& q = h.at(c[(k + 1) % 4].first, c[(k + 1) % 4].second);
    const double zp = p.z();
    const double zq = q.z();
    if ((zp <= 0.0 && zq >= 0.0) || (zp >= 0.0 && zq <= 0.0)) {
      if (zp == zq) return p.position();
      const double lam = zp / (zp - zq);
      const Vec3 x = (1.0 - lam) * p.position() + lam * q.position();
      if (x.head<2>().norm() > 1e-12) return x;
    }
  }
  int best = 0;
  for (int k = 1; k < 4; ++k) {
    if (std::abs(h.at(c[k].first, c[k].second).z()) <
        std::abs(h.at(c[best].first, c[best].second).z())) {
      best = k;
    }
  }
  return h.at(c[best].first, c[best].second).position();
}

double planar_step(const Vec3& a, const Vec3& b) {
  return std::atan2(a.x() * b.y() - a.y() * b.x(), a.x() * b.x() + a.y() * b.y());
}

double reduce(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

bool covers(double lo_lift, double hi_lift, double from, double to, double tol) {
  // Is [from + 2πk, to + 2πk] within [lo_lift − tol, hi_lift + tol] for some k?
  const double k0 = std::floor((lo_lift - tol - from) / (2.0 * kPi));
  for (double k = k0; k <= k0 + 2.0; k += 1.0) {
    const double a = from + 2.0 * kPi * k;
    const double b = to + 2.0 * kPi * k;
    if (a >= lo_lift - tol && b <= hi_lift + tol) return true;
  }
  return false;
}

}  // namespace

ArcCoverageReport swept_equator_arcs(const HomotopyGrid& h, double azimuth_low,
                                     double azimuth_high) {
  if (azimuth_low > azimuth_high) {
    throw InvalidArgument("swept_equator_arcs: need azimuth_low <= azimuth_high");
  }
  ArcCoverageReport rep;
  rep.azimuth_low = azimuth_low;
  rep.azimuth_high = azimuth_high;
  if (azimuth_low == azimuth_high) {
    rep.outcome = ArcOutcome::Degenerate;
    rep.covered = {{azimuth_low, azimuth_low}};
    return rep;
  }

  const ScalarGrid f = polar_grid(h);
  const LevelComponent comp = connected_level_component(f, kPi / 2.0);
  rep.component_cells = comp.cells.size();

  std::map<GridCell, std::size_t> index;
  std::vector<Vec3> pts(comp.cells.size());
  for (std::size_t k = 0; k < comp.cells.size(); ++k) {
    index.emplace(comp.cells[k], k);
    pts[k] = crossing_point(h, comp.cells[k].first, comp.cells[k].second);
  }
  // Start at the column-0 cell closest to the equator.
  std::size_t start = 0;
  double best = 2.0;
  for (std::size_t k = 0; k < comp.cells.size(); ++k) {
    if (comp.cells[k].first != 0) continue;
    const double z = std::abs(pts[k].z() / pts[k].norm());
    if (z < best) {
      best = z;
      start = k;
    }
  }
  std::vector<double> lift(comp.cells.size(), 0.0);
  std::vector<char> seen(comp.cells.size(), 0);
  lift[start] = std::atan2(pts[start].y(), pts[start].x());
  seen[start] = 1;
  std::deque<std::size_t> queue{start};
  rep.lifted_min = rep.lifted_max = lift[start];
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    const auto [i, j] = comp.cells[u];
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        if (di == 0 && dj == 0) continue;
        const auto it = index.find({i + di, j + dj});
        if (it == index.end() || seen[it->second]) continue;
        const std::size_t v = it->second;
        const double step = planar_step(pts[u], pts[v]);
        lift[v] = lift[u] + step;
        seen[v] = 1;
        rep.max_step = std::max(rep.max_step, std::abs(step));
        rep.lifted_min = std::min(rep.lifted_min, lift[v]);
        rep.lifted_max = std::max(rep.lifted_max, lift[v]);
        queue.push_back(v);
      }
    }
  }
  rep.tolerance = 2.0 * rep.max_step;
  rep.short_arc = covers(rep.lifted_min, rep.lifted_max, azimuth_low, azimuth_high, rep.tolerance);
  rep.long_arc = covers(rep.lifted_min, rep.lifted_max, azimuth_high, azimuth_low + 2.0 * kPi,
                        rep.tolerance);
  if (rep.short_arc && rep.long_arc) {
    rep.outcome = ArcOutcome::BothArcs;
  } else if (rep.short_arc) {
    rep.outcome = ArcOutcome::ShortArc;
  } else if (rep.long_arc) {
    rep.outcome = ArcOutcome::LongArc;
  } else {
    rep.outcome = ArcOutcome::Inconclusive;
  }
  if (rep.lifted_max - rep.lifted_min >= 2.0 * kPi) {
    rep.covered = {{-kPi, kPi}};
  } else {
    const double a = reduce(rep.lifted_min);
    const double b = a + (rep.lifted_max - rep.lifted_min);
    if (b <= kPi) {
      rep.covered = {{a, b}};
    } else {
      rep.covered = {{a, kPi}, {-kPi, b - 2.0 * kPi}};
    }
  }
  return rep;
}

}  // namespace lorhom
