#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace lorhom {

/// Samples F(sᵢ, tⱼ) on [a,b] × [c,d], pinned to θ₀ on t = c and θ₁ on t = d.
class ScalarGrid {
 public:
  /// `values` is row-major in s: values[i * (T+1) + j]. Throws
  /// InvalidArgument when the boundary pinning fails by more than 1e-9.
  ScalarGrid(int s_intervals, int t_intervals, double a, double b, double c, double d,
             std::vector<double> values, double level_low, double level_high);

  static ScalarGrid sample(const std::function<double(double, double)>& f, int s_intervals,
                           int t_intervals, double a, double b, double c, double d,
                           double level_low, double level_high);

  int s_intervals() const { return s_; }
  int t_intervals() const { return t_; }
  double s_at(int i) const { return a_ + (b_ - a_) * i / s_; }
  double t_at(int j) const { return c_ + (d_ - c_) * j / t_; }
  double operator()(int i, int j) const { return values_[static_cast<std::size_t>(i) * (t_ + 1) + j]; }
  double level_low() const { return low_; }
  double level_high() const { return high_; }
  /// Largest difference between horizontally or vertically adjacent samples.
  double max_adjacent_jump() const;

 private:
  int s_, t_;
  double a_, b_, c_, d_;
  std::vector<double> values_;
  double low_, high_;
};

/// Cell (i, j) has corners (i..i+1, j..j+1).
using GridCell = std::pair<int, int>;

struct LevelComponent {
  double level = 0.0;
  double band = 0.0;
  std::vector<GridCell> cells;
  bool connected = true;
  bool touches_a = false;
  bool touches_b = false;

  bool spans() const { return touches_a && touches_b; }
};

/// Connected set of cells straddling [θ − band, θ + band] that touches the
/// s = a edge (the one reaching s = b if several do). The default band is
/// half the grid's max adjacent jump. Throws ResolutionTooCoarse when some column
/// has no straddling cell or band < max jump / 2; InvalidArgument unless
/// θ₀ < θ < θ₁.
LevelComponent connected_level_component(const ScalarGrid& grid, double level,
                                         std::optional<double> band = std::nullopt);

/// CSV with header i,j,s,t.
void write_component_csv(std::ostream& os, const ScalarGrid& grid, const LevelComponent& comp);

}  // namespace lorhom
