#include "lorhom/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <queue>
#include <unordered_map>

#include "lorhom/errors.hpp"

namespace lorhom {

namespace detail {

int PointIndex::cell_of(double c) const {
  return std::clamp(static_cast<int>(std::floor((c + 1.0) / cell_)), 0, dim_ - 1);
}

std::int64_t PointIndex::key(int ix, int iy, int iz) const {
  return (static_cast<std::int64_t>(ix) * dim_ + iy) * dim_ + iz;
}

void PointIndex::build(const std::vector<SpherePoint>& points, std::size_t count, double cell) {
  cell_ = cell;
  dim_ = std::max(1, static_cast<int>(std::ceil(2.0 / cell)) + 1);
  std::vector<std::pair<std::int64_t, std::uint32_t>> tagged;
  tagged.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Vec3& x = points[i].position();
    tagged.emplace_back(key(cell_of(x.x()), cell_of(x.y()), cell_of(x.z())),
                        static_cast<std::uint32_t>(i));
  }
  std::sort(tagged.begin(), tagged.end());
  keys_.clear();
  start_.clear();
  items_.clear();
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    if (i == 0 || tagged[i].first != tagged[i - 1].first) {
      keys_.push_back(tagged[i].first);
      start_.push_back(i);
    }
    items_.push_back(tagged[i].second);
  }
  start_.push_back(items_.size());
}

std::vector<std::pair<double, std::uint32_t>> PointIndex::query(
    const std::vector<SpherePoint>& points, const Vec3& x, double radius) const {
  std::vector<std::pair<double, std::uint32_t>> out;
  const double chord = 2.0 * std::sin(std::min(radius, kPi) / 2.0) + 1e-12;
  const int lo[3] = {cell_of(x.x() - chord), cell_of(x.y() - chord), cell_of(x.z() - chord)};
  const int hi[3] = {cell_of(x.x() + chord), cell_of(x.y() + chord), cell_of(x.z() + chord)};
  const SpherePoint c(x);
  for (int ix = lo[0]; ix <= hi[0]; ++ix) {
    for (int iy = lo[1]; iy <= hi[1]; ++iy) {
      for (int iz = lo[2]; iz <= hi[2]; ++iz) {
        const std::int64_t k = key(ix, iy, iz);
        const auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
        if (it == keys_.end() || *it != k) continue;
        const std::size_t b = static_cast<std::size_t>(it - keys_.begin());
        for (std::size_t j = start_[b]; j < start_[b + 1]; ++j) {
          const double d = distance(c, points[items_[j]]);
          if (d <= radius) out.emplace_back(d, items_[j]);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

namespace {

using EdgeKey = std::uint64_t;

EdgeKey edge_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<EdgeKey>(a) << 32) | b;
}

struct Face {
  std::uint32_t a, b, c;
};

void icosahedron(std::vector<SpherePoint>& v, std::vector<Face>& faces) {
  v.clear();
  v.push_back(SpherePoint::north());
  v.push_back(SpherePoint::south());
  const double z = 1.0 / std::sqrt(5.0);
  const double polar = std::acos(z);
  for (int k = 0; k < 5; ++k) v.push_back(SpherePoint::from_angles(polar, 2.0 * kPi * k / 5.0));
  for (int k = 0; k < 5; ++k) {
    v.push_back(SpherePoint::from_angles(kPi - polar, 2.0 * kPi * k / 5.0 + kPi / 5.0));
  }
  faces.clear();
  for (std::uint32_t k = 0; k < 5; ++k) {
    const std::uint32_t u0 = 2 + k, u1 = 2 + (k + 1) % 5;
    const std::uint32_t l0 = 7 + k, l1 = 7 + (k + 1) % 5;
    faces.push_back({0, u0, u1});
    faces.push_back({u0, l0, u1});
    faces.push_back({l0, l1, u1});
    faces.push_back({1, l1, l0});
  }
}

void subdivide(std::vector<SpherePoint>& v, std::vector<Face>& faces) {
  std::unordered_map<EdgeKey, std::uint32_t> mid;
  mid.reserve(faces.size() * 2);
  auto midpoint = [&](std::uint32_t a, std::uint32_t b) {
    const EdgeKey k = edge_key(a, b);
    const auto it = mid.find(k);
    if (it != mid.end()) return it->second;
    const std::uint32_t idx = static_cast<std::uint32_t>(v.size());
    v.push_back(SpherePoint(v[a].position() + v[b].position()));
    mid.emplace(k, idx);
    return idx;
  };
  std::vector<Face> out;
  out.reserve(faces.size() * 4);
  for (const Face& f : faces) {
    const std::uint32_t ab = midpoint(f.a, f.b);
    const std::uint32_t bc = midpoint(f.b, f.c);
    const std::uint32_t ca = midpoint(f.c, f.a);
    out.push_back({f.a, ab, ca});
    out.push_back({ab, f.b, bc});
    out.push_back({ca, bc, f.c});
    out.push_back({ab, bc, ca});
  }
  faces.swap(out);
}

bool contains_azimuth(const std::vector<double>& list, double a) {
  return std::any_of(list.begin(), list.end(), [a](double b) { return std::abs(a - b) < 1e-15; });
}

}  // namespace

MeshOptions default_mesh_options() { return MeshOptions{}; }

GeodesicMesh build_mesh(const ConformalFactorSpec& spec, int level, const MeshOptions& options) {
  if (level < 0) throw InvalidArgument("mesh level must be non-negative");
  if (level > kMaxMeshLevel) throw ResourceError("mesh level above 9 is not supported");

  GeodesicMesh m;
  m.level_ = level;
  m.factor_ = spec;
  m.spacing_ = std::atan(2.0) / std::ldexp(1.0, level);
  const double h = m.spacing_;

  std::vector<Face> faces;
  icosahedron(m.vertices_, faces);
  for (int l = 0; l < level; ++l) subdivide(m.vertices_, faces);
  m.ico_count_ = m.vertices_.size();
  m.meridian_id_.assign(m.ico_count_, -1);

  std::vector<EdgeKey> keys;
  keys.reserve(faces.size() * 3 * (options.shortcuts ? 3 : 1));
  for (const Face& f : faces) {
    keys.push_back(edge_key(f.a, f.b));
    keys.push_back(edge_key(f.b, f.c));
    keys.push_back(edge_key(f.c, f.a));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  if (options.shortcuts) {
    std::vector<std::vector<std::uint32_t>> ring(m.ico_count_);
    for (EdgeKey k : keys) {
      const auto a = static_cast<std::uint32_t>(k >> 32);
      const auto b = static_cast<std::uint32_t>(k & 0xffffffffu);
      ring[a].push_back(b);
      ring[b].push_back(a);
    }
    const std::size_t one_ring = keys.size();
    for (std::uint32_t v = 0; v < m.ico_count_; ++v) {
      for (std::uint32_t u : ring[v]) {
        for (std::uint32_t w : ring[u]) {
          if (w <= v) continue;
          if (std::find(ring[v].begin(), ring[v].end(), w) != ring[v].end()) continue;
          keys.push_back(edge_key(v, w));
        }
      }
    }
    std::sort(keys.begin() + static_cast<std::ptrdiff_t>(one_ring), keys.end());
    std::inplace_merge(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(one_ring),
                       keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  }

  detail::PointIndex ico_index;
  ico_index.build(m.vertices_, m.ico_count_, 1.6 * h);
  std::vector<std::uint32_t> inserted;

  auto add_vertex = [&](const SpherePoint& p, std::int32_t meridian) {
    const auto idx = static_cast<std::uint32_t>(m.vertices_.size());
    m.vertices_.push_back(p);
    m.meridian_id_.push_back(meridian);
    inserted.push_back(idx);
    return idx;
  };

  const int half = static_cast<int>(std::ceil(kPi / (2.0 * h)));
  const int steps = 2 * half;
  const double band = spec.base_params().support_half_width + 2.0 * h;

  auto add_chain = [&](double azimuth, bool full) {
    const auto id = static_cast<std::int32_t>(m.chains_.size());
    std::vector<std::uint32_t> chain{m.north_index()};
    std::uint32_t equator = 0;
    for (int k = 1; k < steps; ++k) {
      const double theta = kPi * k / steps;
      if (!full && std::abs(theta - kPi / 2.0) > band) continue;
      const std::uint32_t v = add_vertex(SpherePoint::from_angles(theta, azimuth), id);
      if (k == half) equator = v;
      chain.push_back(v);
    }
    chain.push_back(m.south_index());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) keys.push_back(edge_key(chain[i], chain[i + 1]));
    m.chain_azimuth_.push_back(azimuth);
    m.chains_.push_back(std::move(chain));
    m.chain_equator_.push_back(equator);
  };

  const int nmax = spec.max_index();
  std::vector<double> full_azimuths;
  if (options.special_meridians) {
    full_azimuths.push_back(0.0);
    for (int n = 1; n <= nmax; ++n) full_azimuths.push_back(meridian_azimuth(n));
    for (double a : full_azimuths) add_chain(a, true);
  }
  std::vector<double> scan;
  for (double a : options.scan_azimuths) {
    if (!contains_azimuth(full_azimuths, a) && !contains_azimuth(scan, a)) scan.push_back(a);
  }
  for (double a : scan) add_chain(a, false);
  if (options.special_points) {
    for (int n = 1; n <= nmax; ++n) {
      if (!options.special_meridians) add_vertex(SpherePoint::on_equator(meridian_azimuth(n)), -1);
      if (!contains_azimuth(scan, midpoint_azimuth(n))) {
        add_vertex(SpherePoint::on_equator(midpoint_azimuth(n)), -1);
      }
    }
  }

  for (std::uint32_t v : inserted) {
    const Vec3& x = m.vertices_[v].position();
    auto near = ico_index.query(m.vertices_, x, 1.6 * h);
    if (near.size() < 3) near = ico_index.query(m.vertices_, x, 3.2 * h);
    std::size_t taken = 0;
    for (const auto& [d, u] : near) {
      if (d == 0.0) continue;
      if (d > 1.6 * h && taken >= 3) break;
      keys.push_back(edge_key(u, v));
      ++taken;
    }
  }

  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  m.polar_.resize(m.vertices_.size());
  for (std::size_t i = 0; i < m.vertices_.size(); ++i) m.polar_[i] = m.vertices_[i].polar();

  const std::size_t ne = keys.size();
  m.edge_u_.resize(ne);
  m.edge_v_.resize(ne);
  m.edge_w_.resize(ne);
  std::vector<std::size_t> degree(m.vertices_.size() + 1, 0);
  for (std::size_t e = 0; e < ne; ++e) {
    const auto a = static_cast<std::uint32_t>(keys[e] >> 32);
    const auto b = static_cast<std::uint32_t>(keys[e] & 0xffffffffu);
    m.edge_u_[e] = a;
    m.edge_v_[e] = b;
    m.edge_w_[e] = segment_length(spec, m.vertices_[a], m.vertices_[b]);
    ++degree[a];
    ++degree[b];
  }
  m.offsets_.assign(m.vertices_.size() + 1, 0);
  for (std::size_t i = 0; i < m.vertices_.size(); ++i) m.offsets_[i + 1] = m.offsets_[i] + degree[i];
  m.adj_.resize(m.offsets_.back());
  std::vector<std::size_t> fill(m.offsets_.begin(), m.offsets_.end() - 1);
  for (std::size_t e = 0; e < ne; ++e) {
    const auto e32 = static_cast<std::uint32_t>(e);
    m.adj_[fill[m.edge_u_[e]]++] = {m.edge_v_[e], e32};
    m.adj_[fill[m.edge_v_[e]]++] = {m.edge_u_[e], e32};
  }

  m.index_.build(m.vertices_, m.vertices_.size(), h);
  return m;
}

std::uint32_t GeodesicMesh::snap(const SpherePoint& p) const {
  const auto near = index_.query(vertices_, p.position(), spacing_);
  if (near.empty()) throw SnapError("point is farther than one cell from every mesh vertex");
  return near.front().second;
}

std::optional<std::uint32_t> GeodesicMesh::equator_vertex(double azimuth) const {
  for (std::size_t c = 0; c < chains_.size(); ++c) {
    if (std::abs(chain_azimuth_[c] - azimuth) < 1e-15) return chain_equator_[c];
  }
  return std::nullopt;
}

std::optional<std::vector<std::uint32_t>> GeodesicMesh::chain_vertices(double azimuth) const {
  for (std::size_t c = 0; c < chains_.size(); ++c) {
    if (std::abs(chain_azimuth_[c] - azimuth) < 1e-15) return chains_[c];
  }
  return std::nullopt;
}

std::vector<SplitLength> GeodesicMesh::distances_from(std::uint32_t source) const {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<SplitLength> dist(vertices_.size(), SplitLength{inf, 0.0});
  std::vector<double> key(vertices_.size(), inf);
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = {0.0, 0.0};
  key[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [k, u] = heap.top();
    heap.pop();
    if (k > key[u]) continue;
    for (const Adjacent* a = neighbours_begin(u); a != neighbours_end(u); ++a) {
      const SplitLength cand = dist[u] + edge_w_[a->edge];
      const double ck = cand.total();
      if (ck < key[a->vertex]) {
        key[a->vertex] = ck;
        dist[a->vertex] = cand;
        heap.emplace(ck, a->vertex);
      }
    }
  }
  return dist;
}

double GeodesicMesh::detour(std::size_t e, std::uint32_t from, Pole pole) const {
  const std::uint32_t to = edge_u_[e] == from ? edge_v_[e] : edge_u_[e];
  const double len = edge_w_[e].base;
  if (meridian_id_[from] >= 0 && meridian_id_[from] == meridian_id_[to]) {
    const double rise = polar_[to] - polar_[from];
    return (pole == Pole::North ? rise > 0.0 : rise < 0.0) ? 0.0 : 2.0 * len;
  }
  if (pole == Pole::North) return polar_detour(vertices_[from], vertices_[to], len);
  return polar_detour(vertices_[to], vertices_[from], len);
}

std::vector<double> GeodesicMesh::reduced_distances(Pole pole) const {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(vertices_.size(), inf);
  const std::uint32_t source = pole == Pole::North ? north_index() : south_index();
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [k, u] = heap.top();
    heap.pop();
    if (k > dist[u]) continue;
    for (const Adjacent* a = neighbours_begin(u); a != neighbours_end(u); ++a) {
      const double cand = dist[u] + detour(a->edge, u, pole) + edge_w_[a->edge].surplus;
      if (cand < dist[a->vertex]) {
        dist[a->vertex] = cand;
        heap.emplace(cand, a->vertex);
      }
    }
  }
  return dist;
}

bool GeodesicMesh::connected() const {
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::uint32_t u = stack.back();
    stack.pop_back();
    for (const Adjacent* a = neighbours_begin(u); a != neighbours_end(u); ++a) {
      if (!seen[a->vertex]) {
        seen[a->vertex] = 1;
        ++count;
        stack.push_back(a->vertex);
      }
    }
  }
  return count == vertices_.size();
}

SplitLength mesh_distance_split(const GeodesicMesh& mesh, const SpherePoint& p,
                                const SpherePoint& q) {
  std::uint32_t a = mesh.snap(p);
  std::uint32_t b = mesh.snap(q);
  if (a == b) return {};
  if (b < a) std::swap(a, b);
  return mesh.distances_from(a)[b];
}

double mesh_distance(const GeodesicMesh& mesh, const SpherePoint& p, const SpherePoint& q) {
  return mesh_distance_split(mesh, p, q).total();
}

void write_mesh_csv(std::ostream& os, const GeodesicMesh& mesh) {
  const auto old = os.precision(17);
  os << "index,x,y,z,theta,phi,omega\n";
  for (std::size_t i = 0; i < mesh.vertex_count(); ++i) {
    const SpherePoint& p = mesh.vertex(i);
    os << i << ',' << p.x() << ',' << p.y() << ',' << p.z() << ',' << p.polar() << ','
       << p.azimuth() << ',' << mesh.factor().value(p) << '\n';
  }
  os.precision(old);
}

}  // namespace lorhom
