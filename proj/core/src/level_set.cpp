#include "lorhom/level_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "lorhom/errors.hpp"

namespace lorhom {

ScalarGrid::ScalarGrid(int s_intervals, int t_intervals, double a, double b, double c, double d,
                       std::vector<double> values, double level_low, double level_high)
    : s_(s_intervals),
      t_(t_intervals),
      a_(a),
      b_(b),
      c_(c),
      d_(d),
      values_(std::move(values)),
      low_(level_low),
      high_(level_high) {
  if (s_ < 1 || t_ < 1) throw InvalidArgument("ScalarGrid: need at least one cell");
  if (!(b_ > a_) || !(d_ > c_)) throw InvalidArgument("ScalarGrid: empty domain");
  if (!(low_ < high_)) throw InvalidArgument("ScalarGrid: need level_low < level_high");
  if (values_.size() != static_cast<std::size_t>(s_ + 1) * (t_ + 1)) {
    throw InvalidArgument("ScalarGrid: value count does not match grid size");
  }
  for (int i = 0; i <= s_; ++i) {
    if (std::abs((*this)(i, 0) - low_) > 1e-9 || std::abs((*this)(i, t_) - high_) > 1e-9) {
      throw InvalidArgument("ScalarGrid: boundary values are not pinned to the levels");
    }
  }
}

ScalarGrid ScalarGrid::sample(const std::function<double(double, double)>& f, int s_intervals,
                              int t_intervals, double a, double b, double c, double d,
                              double level_low, double level_high) {
  std::vector<double> v(static_cast<std::size_t>(s_intervals + 1) * (t_intervals + 1));
  for (int i = 0; i <= s_intervals; ++i) {
    const double s = a + (b - a) * i / s_intervals;
    for (int j = 0; j <= t_intervals; ++j) {
      const double t = j == t_intervals ? d : c + (d - c) * j / t_intervals;
      v[static_cast<std::size_t>(i) * (t_intervals + 1) + j] = f(s, t);
    }
  }
  return ScalarGrid(s_intervals, t_intervals, a, b, c, d, std::move(v), level_low, level_high);
}

double ScalarGrid::max_adjacent_jump() const {
  double m = 0.0;
  for (int i = 0; i <= s_; ++i) {
    for (int j = 0; j <= t_; ++j) {
      if (i < s_) m = std::max(m, std::abs((*this)(i + 1, j) - (*this)(i, j)));
      if (j < t_) m = std::max(m, std::abs((*this)(i, j + 1) - (*this)(i, j)));
    }
  }
  return m;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

LevelComponent connected_level_component(const ScalarGrid& grid, double level,
                                         std::optional<double> band) {
  if (!(level > grid.level_low() && level < grid.level_high())) {
    throw InvalidArgument("connected_level_component: level outside (theta0, theta1)");
  }
  const double jump = grid.max_adjacent_jump();
  const double w = band.value_or(0.5 * jump);
  if (w < 0.5 * jump) {
    throw ResolutionTooCoarse("band is below half the largest adjacent-sample jump");
  }
  const int S = grid.s_intervals();
  const int T = grid.t_intervals();
  auto id = [T](int i, int j) { return i * T + j; };
  std::vector<char> marked(static_cast<std::size_t>(S) * T, 0);
  for (int i = 0; i < S; ++i) {
    bool any = false;
    for (int j = 0; j < T; ++j) {
      const double v[4] = {grid(i, j), grid(i + 1, j), grid(i, j + 1), grid(i + 1, j + 1)};
      const double lo = *std::min_element(v, v + 4);
      const double hi = *std::max_element(v, v + 4);
      if (lo <= level + w && hi >= level - w) {
        marked[id(i, j)] = 1;
        any = true;
      }
    }
    if (!any) throw ResolutionTooCoarse("a grid column has no cell crossing the level");
  }
  UnionFind uf(S * T);
  for (int i = 0; i < S; ++i) {
    for (int j = 0; j < T; ++j) {
      if (!marked[id(i, j)]) continue;
      for (int di = 0; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj <= 0) continue;
          const int ni = i + di;
          const int nj = j + dj;
          if (ni >= S || nj < 0 || nj >= T) continue;
          if (marked[id(ni, nj)]) uf.unite(id(i, j), id(ni, nj));
        }
      }
    }
  }
  int chosen = -1;
  for (int j = 0; j < T; ++j) {
    if (!marked[id(0, j)]) continue;
    const int root = uf.find(id(0, j));
    bool reaches_b = false;
    for (int k = 0; k < T && !reaches_b; ++k) {
      reaches_b = marked[id(S - 1, k)] && uf.find(id(S - 1, k)) == root;
    }
    if (chosen < 0 || reaches_b) chosen = root;
    if (reaches_b) break;
  }
  LevelComponent comp;
  comp.level = level;
  comp.band = w;
  for (int i = 0; i < S; ++i) {
    for (int j = 0; j < T; ++j) {
      if (marked[id(i, j)] && uf.find(id(i, j)) == chosen) {
        comp.cells.emplace_back(i, j);
        if (i == 0) comp.touches_a = true;
        if (i == S - 1) comp.touches_b = true;
      }
    }
  }
  return comp;
}

void write_component_csv(std::ostream& os, const ScalarGrid& grid, const LevelComponent& comp) {
  const auto old = os.precision(17);
  os << "i,j,s,t\n";
  for (const auto& [i, j] : comp.cells) {
    os << i << ',' << j << ',' << 0.5 * (grid.s_at(i) + grid.s_at(i + 1)) << ','
       << 0.5 * (grid.t_at(j) + grid.t_at(j + 1)) << '\n';
  }
  os.precision(old);
}

}  // namespace lorhom
