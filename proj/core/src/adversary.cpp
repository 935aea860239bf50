#include "lorhom/adversary.hpp"

#include <algorithm>
#include <cmath>

#include "lorhom/errors.hpp"
#include "lorhom/random.hpp"

namespace lorhom {

namespace {

class RowModel {
 public:
  RowModel(const ConformalFactorSpec& factor, const HomotopyGrid& base, int modes)
      : factor_(factor), base_(base), modes_(modes) {
    const auto& t = base.t_values();
    sines_.resize(t.size() * modes);
    for (std::size_t j = 0; j < t.size(); ++j) {
      for (int k = 0; k < modes; ++k) sines_[j * modes + k] = std::sin((k + 1) * t[j]);
    }
  }

  std::vector<SpherePoint> row_points(std::size_t i, const std::vector<double>& c) const {
    const std::size_t cols = base_.columns();
    std::vector<SpherePoint> pts(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      const SpherePoint& p = base_.at(i, j);
      if (j == 0 || j + 1 == cols) {
        pts[j] = p;
        continue;
      }
      double u = 0.0, v = 0.0;
      for (int k = 0; k < modes_; ++k) {
        u += c[2 * k] * sines_[j * modes_ + k];
        v += c[2 * k + 1] * sines_[j * modes_ + k];
      }
      pts[j] = (u == 0.0 && v == 0.0)
                   ? p
                   : exp_map(p, u * azimuth_direction(p) + v * polar_direction(p));
    }
    return pts;
  }

  double excess(const std::vector<SpherePoint>& pts) const {
    return polar_excess(factor_, SphereCurve(base_.t_values(), pts));
  }

  double penalty(const std::vector<double>& c) const {
    double p = 0.0;
    for (int k = 0; k < modes_; ++k) {
      p += (k + 1) * (k + 1) * (c[2 * k] * c[2 * k] + c[2 * k + 1] * c[2 * k + 1]);
    }
    return p;
  }

 private:
  const ConformalFactorSpec& factor_;
  const HomotopyGrid& base_;
  int modes_;
  std::vector<double> sines_;
};

double max_gap(const std::vector<SpherePoint>& a, const std::vector<SpherePoint>& b) {
  double g = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) g = std::max(g, distance(a[j], b[j]));
  return g;
}

}  // namespace

AdversaryResult attempt_causal_homotopy(const ConformalFactorSpec& factor,
                                        const SpacetimeCurve& from, const SpacetimeCurve& to,
                                        const AdversaryOptions& options) {
  if (options.s_intervals < 2 || options.t_intervals < 2 || options.modes < 1) {
    throw InvalidArgument("attempt_causal_homotopy: grid or mode count too small");
  }
  const double a = meridian_azimuth_of(from.space());
  const double b = meridian_azimuth_of(to.space());
  const HomotopyGrid base =
      rotation_homotopy(a, b, Winding::Short, options.s_intervals, options.t_intervals);
  const std::size_t rows = base.rows();
  const std::size_t cols = base.columns();
  const int nc = 2 * options.modes;
  RowModel model(factor, base, options.modes);

  std::vector<std::vector<double>> coef(rows, std::vector<double>(nc, 0.0));
  std::vector<std::vector<SpherePoint>> pts(rows);
  std::vector<double> ex(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    pts[i] = model.row_points(i, coef[i]);
    ex[i] = model.excess(pts[i]);
  }
  const double floor = std::max({ex.front(), ex.back(), 0.0});
  double bound = 0.0;
  for (std::size_t i = 0; i + 1 < rows; ++i) bound = std::max(bound, max_gap(pts[i], pts[i + 1]));
  bound *= 2.0;

  auto residual_of = [&](const std::vector<double>& e) {
    return std::max(0.0, *std::max_element(e.begin(), e.end()) - floor);
  };

  AdversaryResult result{base, 0.0, 0.0, 0, false, bound, ex};
  result.initial_residual = residual_of(ex);
  result.residual = result.initial_residual;
  if (result.residual == 0.0) return result;

  auto best_coef = coef;
  auto best_ex = ex;
  Rng rng(options.seed);
  std::vector<double> step(rows, options.initial_step);

  auto continuous = [&](std::size_t i, const std::vector<SpherePoint>& cand) {
    return max_gap(cand, pts[i - 1]) <= bound && max_gap(cand, pts[i + 1]) <= bound;
  };

  int it = 0;
  for (; it < options.iterations; ++it) {
    std::size_t row = 1;
    if (rng.uniform() < 0.2) {
      row = 1 + rng.below(rows - 2);
    } else {
      for (std::size_t i = 1; i + 1 < rows; ++i) {
        if (ex[i] > ex[row]) row = i;
      }
    }
    const double lambda = options.smoothness_weight;
    double obj = ex[row] + lambda * model.penalty(coef[row]);
    bool improved = false;
    for (int k = 0; k < nc; ++k) {
      for (double dir : {1.0, -1.0}) {
        std::vector<double> c = coef[row];
        c[k] += dir * step[row];
        auto cand = model.row_points(row, c);
        if (!continuous(row, cand)) continue;
        const double e = model.excess(cand);
        const double o = e + lambda * model.penalty(c);
        if (o < obj) {
          coef[row] = std::move(c);
          pts[row] = std::move(cand);
          ex[row] = e;
          obj = o;
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      step[row] *= 0.5;
      if (step[row] < options.min_step) step[row] = options.initial_step;
    }
    const double r = residual_of(ex);
    if (r < result.residual) {
      result.residual = r;
      best_coef = coef;
      best_ex = ex;
    }
    if (result.residual == 0.0) {
      ++it;
      break;
    }
    if (options.restart_every > 0 && (it + 1) % options.restart_every == 0) {
      // Annealing restart: jitter the best state and keep going from there.
      coef = best_coef;
      const double amp = options.temperature * options.initial_step;
      for (std::size_t i = 1; i + 1 < rows; ++i) {
        for (int k = 0; k < nc; ++k) coef[i][k] += rng.uniform(-amp, amp);
      }
      for (std::size_t i = 0; i < rows; ++i) pts[i] = model.row_points(i, coef[i]);
      bool ok = true;
      for (std::size_t i = 0; i + 1 < rows && ok; ++i) ok = max_gap(pts[i], pts[i + 1]) <= bound;
      if (!ok) {
        coef = best_coef;
        for (std::size_t i = 0; i < rows; ++i) pts[i] = model.row_points(i, coef[i]);
      }
      for (std::size_t i = 0; i < rows; ++i) ex[i] = model.excess(pts[i]);
      std::fill(step.begin(), step.end(), options.initial_step);
    }
  }
  result.iterations = it;
  result.exhausted = it >= options.iterations;

  std::vector<SpherePoint> all;
  all.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto p = model.row_points(i, best_coef[i]);
    all.insert(all.end(), p.begin(), p.end());
  }
  result.best = HomotopyGrid(base.s_values(), base.t_values(), std::move(all));
  result.row_excess = best_ex;
  return result;
}

}  // namespace lorhom
