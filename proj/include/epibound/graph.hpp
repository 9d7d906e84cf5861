#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace epibound {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph in CSR form. Vertices are dense ids 0..n-1,
/// each adjacency list is strictly increasing, and every edge is stored
/// once as (u,v) with u < v, sorted lexicographically. Immutable after
/// construction and safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Canonicalizes an edge list: duplicate edges collapse silently,
  /// self-loops and out-of-range endpoints are rejected.
  static Graph from_edge_list(Vertex n,
                              std::span<const std::pair<Vertex, Vertex>> edges);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  /// Edge ids aligned entry-for-entry with neighbors(v); ids index edges().
  std::span<const std::uint32_t> incident_edge_ids(Vertex v) const {
    return {edge_ids_.data() + offsets_[v], edge_ids_.data() + offsets_[v + 1]};
  }

  const std::vector<Edge>& edges() const { return edges_; }

  Vertex degree(Vertex v) const {
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
  }

 private:
  Vertex n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<std::uint32_t> edge_ids_;
  std::vector<Edge> edges_;
};

/// Nonempty, deduplicated, ascending set of initially infected vertices.
class SeedSet {
 public:
  /// Sorts and deduplicates; rejects an empty set or ids outside [0, n).
  SeedSet(std::vector<Vertex> ids, Vertex n);

  std::span<const Vertex> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool contains(Vertex v) const;

 private:
  std::vector<Vertex> ids_;
};

/// Per-vertex minimum graph distance to a seed set. Unreachable vertices
/// carry an explicit marker, never a sentinel distance.
class DistanceMap {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  explicit DistanceMap(std::vector<std::int32_t> dist) : dist_(std::move(dist)) {}

  bool reachable(Vertex v) const { return dist_[v] >= 0; }
  std::int32_t operator[](Vertex v) const { return dist_[v]; }
  std::size_t size() const { return dist_.size(); }

  /// Largest finite distance (the seed set's eccentricity).
  std::int32_t max_finite() const;

  const std::vector<std::int32_t>& values() const { return dist_; }

 private:
  std::vector<std::int32_t> dist_;
};

/// Induced subgraph on the vertices within a given distance of a center.
struct Ball {
  std::int32_t radius = 0;
  Vertex center = 0;
  std::vector<Vertex> vertices;     // ascending original ids
  std::vector<Edge> induced_edges;  // original ids, canonical order
};

struct DegreeStats {
  Vertex min = 0;
  Vertex max = 0;
  double mean = 0.0;
};

/// Multi-source BFS: dist(v) = min over seeds s of d_G(v, s). Equivalent
/// to rooting at a virtual vertex joined to every seed and shifting
/// levels down by one. Neighbors are explored in ascending id order.
DistanceMap bfs_distances(const Graph& g, const SeedSet& seeds);

Ball extract_ball(const Graph& g, Vertex center, std::int32_t radius);

bool is_tree(const Graph& g);
bool is_tree(const Ball& ball);

/// Largest d such that the radius-d ball around `center` is a tree,
/// capped at d_max and at the center's eccentricity within its component
/// (balls stop growing there). Radius 0 always qualifies.
std::int32_t tree_like_radius(const Graph& g, Vertex center, std::int32_t d_max);

DegreeStats degree_stats(const Graph& g);

}  // namespace epibound
