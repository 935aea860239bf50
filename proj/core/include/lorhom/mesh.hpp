#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "lorhom/curve.hpp"
#include "lorhom/factor.hpp"

namespace lorhom {

inline constexpr int kMaxMeshLevel = 9;

/// What gets inserted on top of the subdivided icosahedron.
struct MeshOptions {
  /// 2-ring shortcut edges between icosphere vertices.
  bool shortcuts = true;
  /// Exact vertices at pₙ and qₙ, n ≤ N_max (N and S are icosphere vertices).
  bool special_points = true;
  /// Full vertex chains along φ = 0 and every φₙ, n ≤ N_max.
  bool special_meridians = true;
  /// Equatorial-band chains at these azimuths, joined to N and S by single
  /// meridian edges. Each chain holds an exact equator vertex.
  std::vector<double> scan_azimuths;

  /// Plain subdivided icosahedron with 2-ring shortcuts.
  static MeshOptions bare() {
    MeshOptions o;
    o.special_points = false;
    o.special_meridians = false;
    return o;
  }
};

enum class Pole { North, South };

namespace detail {

/// Uniform-grid spatial index over points of S².
class PointIndex {
 public:
  void build(const std::vector<SpherePoint>& points, std::size_t count, double cell);
  /// Indices within `radius` (chordal bound, then exact g₀ check), sorted
  /// by (distance, index).
  std::vector<std::pair<double, std::uint32_t>> query(const std::vector<SpherePoint>& points,
                                                      const Vec3& x, double radius) const;

 private:
  std::int64_t key(int ix, int iy, int iz) const;
  int cell_of(double c) const;

  double cell_ = 1.0;
  int dim_ = 1;
  std::vector<std::int64_t> keys_;
  std::vector<std::size_t> start_;
  std::vector<std::uint32_t> items_;
};

}  // namespace detail

/// Weighted graph on S² whose edges are great-circle arcs; weights are
/// g⋆-lengths of those arcs, so every path length is the length of an
/// actual curve.
class GeodesicMesh {
 public:
  int level() const { return level_; }
  const ConformalFactorSpec& factor() const { return factor_; }
  /// Icosphere edge length scale atan(2) / 2^level.
  double spacing() const { return spacing_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t icosphere_vertex_count() const { return ico_count_; }
  std::size_t edge_count() const { return edge_u_.size(); }
  const std::vector<SpherePoint>& vertices() const { return vertices_; }
  const SpherePoint& vertex(std::size_t i) const { return vertices_[i]; }

  /// Undirected edge list with split weights.
  std::uint32_t edge_source(std::size_t e) const { return edge_u_[e]; }
  std::uint32_t edge_target(std::size_t e) const { return edge_v_[e]; }
  const SplitLength& edge_weight(std::size_t e) const { return edge_w_[e]; }

  /// Neighbours of v as (vertex, edge) pairs.
  struct Adjacent {
    std::uint32_t vertex;
    std::uint32_t edge;
  };
  const Adjacent* neighbours_begin(std::uint32_t v) const { return &adj_[offsets_[v]]; }
  const Adjacent* neighbours_end(std::uint32_t v) const { return &adj_[0] + offsets_[v + 1]; }

  std::uint32_t north_index() const { return 0; }
  std::uint32_t south_index() const { return 1; }

  /// Nearest vertex within one cell; SnapError otherwise.
  std::uint32_t snap(const SpherePoint& p) const;
  /// Vertex index of the equator point of the chain at this azimuth, if any.
  std::optional<std::uint32_t> equator_vertex(double azimuth) const;
  /// Vertices of the φ-chain (N first, S last), if the chain exists.
  std::optional<std::vector<std::uint32_t>> chain_vertices(double azimuth) const;

  /// Single-source shortest split lengths (Dijkstra on the total weight).
  std::vector<SplitLength> distances_from(std::uint32_t source) const;

  /// Reduced distances r(v) = d⋆(pole, v) − d₀(pole, v), computed with the
  /// g₀ pole distance as potential so sub-ulp surpluses stay resolved.
  /// Label-correcting, so the negative surpluses of dips are handled.
  std::vector<double> reduced_distances(Pole pole) const;

  /// g₀ detour len(u,v) − (d₀(pole,v) − d₀(pole,u)) ≥ 0 of edge e walked u → v,
  /// with relative accuracy; exactly 0 for edges along a chain meridian.
  double detour(std::size_t e, std::uint32_t from, Pole pole) const;

  bool connected() const;

  friend GeodesicMesh build_mesh(const ConformalFactorSpec& spec, int level,
                                 const MeshOptions& options);

 private:
  GeodesicMesh() = default;

  int level_ = 0;
  double spacing_ = 0.0;
  ConformalFactorSpec factor_ = ConformalFactorSpec::unit();
  std::size_t ico_count_ = 0;
  std::vector<SpherePoint> vertices_;
  std::vector<double> polar_;
  std::vector<std::int32_t> meridian_id_;
  std::vector<std::uint32_t> edge_u_;
  std::vector<std::uint32_t> edge_v_;
  std::vector<SplitLength> edge_w_;
  std::vector<std::size_t> offsets_;
  std::vector<Adjacent> adj_;
  std::vector<double> chain_azimuth_;
  std::vector<std::vector<std::uint32_t>> chains_;
  std::vector<std::uint32_t> chain_equator_;
  detail::PointIndex index_;
};

/// Default options for a factor: special points/meridians up to N_max.
MeshOptions default_mesh_options();

/// Throws ResourceError above kMaxMeshLevel, InvalidArgument below 0.
GeodesicMesh build_mesh(const ConformalFactorSpec& spec, int level,
                        const MeshOptions& options = default_mesh_options());

double mesh_distance(const GeodesicMesh& mesh, const SpherePoint& p, const SpherePoint& q);
SplitLength mesh_distance_split(const GeodesicMesh& mesh, const SpherePoint& p,
                                const SpherePoint& q);

/// CSV with header index,x,y,z,theta,phi,omega.
void write_mesh_csv(std::ostream& os, const GeodesicMesh& mesh);

}  // namespace lorhom
