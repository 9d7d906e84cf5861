#include "epibound/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "epibound/errors.hpp"

namespace epibound {

Graph Graph::from_edge_list(Vertex n,
                            std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw domain_error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") has endpoint outside [0," + std::to_string(n) + ")");
    }
    if (a == b) {
      throw domain_error("self-loop (" + std::to_string(a) + "," +
                         std::to_string(b) + ") is not allowed in a simple graph");
    }
    canon.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(canon.begin(), canon.end(),
            [](const Edge& x, const Edge& y) {
              return x.u != y.u ? x.u < y.u : x.v < y.v;
            });
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(canon);

  std::vector<std::size_t> deg(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  std::partial_sum(deg.begin(), deg.end() - 1, g.offsets_.begin() + 1);
  g.adjacency_.resize(2 * g.edges_.size());
  g.edge_ids_.resize(2 * g.edges_.size());

  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::uint32_t id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    g.adjacency_[cursor[e.u]] = e.v;
    g.edge_ids_[cursor[e.u]++] = id;
    g.adjacency_[cursor[e.v]] = e.u;
    g.edge_ids_[cursor[e.v]++] = id;
  }
  // Sort each adjacency list ascending, keeping edge ids aligned.
  std::vector<std::pair<Vertex, std::uint32_t>> tmp;
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    if (std::is_sorted(nb.begin(), nb.end())) continue;
    auto ids = g.incident_edge_ids(v);
    tmp.assign(nb.size(), {});
    for (std::size_t i = 0; i < nb.size(); ++i) tmp[i] = {nb[i], ids[i]};
    std::sort(tmp.begin(), tmp.end());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      g.adjacency_[g.offsets_[v] + i] = tmp[i].first;
      g.edge_ids_[g.offsets_[v] + i] = tmp[i].second;
    }
  }
  return g;
}

SeedSet::SeedSet(std::vector<Vertex> ids, Vertex n) : ids_(std::move(ids)) {
  if (ids_.empty()) throw domain_error("seed set must be nonempty");
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  if (ids_.back() >= n) {
    throw domain_error("seed id " + std::to_string(ids_.back()) +
                       " outside [0," + std::to_string(n) + ")");
  }
}

bool SeedSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::int32_t DistanceMap::max_finite() const {
  std::int32_t m = 0;
  for (std::int32_t d : dist_) m = std::max(m, d);
  return m;
}

DistanceMap bfs_distances(const Graph& g, const SeedSet& seeds) {
  std::vector<std::int32_t> dist(g.vertex_count(), DistanceMap::kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  for (Vertex s : seeds.ids()) {
    dist[s] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    std::int32_t du = dist[u];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = du + 1;
        queue.push_back(v);
      }
    }
  }
  return DistanceMap(std::move(dist));
}

Ball extract_ball(const Graph& g, Vertex center, std::int32_t radius) {
  if (center >= g.vertex_count()) throw domain_error("ball center out of range");
  if (radius < 0) throw domain_error("ball radius must be nonnegative");

  SeedSet single({center}, g.vertex_count());
  DistanceMap dist = bfs_distances(g, single);

  Ball ball;
  ball.radius = radius;
  ball.center = center;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (dist.reachable(v) && dist[v] <= radius) ball.vertices.push_back(v);
  }
  for (Vertex u : ball.vertices) {
    for (Vertex v : g.neighbors(u)) {
      if (v > u && dist.reachable(v) && dist[v] <= radius) {
        ball.induced_edges.push_back(Edge{u, v});
      }
    }
  }
  return ball;
}

namespace {

// Union-find restricted to a known vertex set; counts merges.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool is_tree(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  if (g.edge_count() != g.vertex_count() - 1) return false;
  UnionFind uf(g.vertex_count());
  std::size_t merges = 0;
  for (const Edge& e : g.edges()) merges += uf.unite(e.u, e.v) ? 1 : 0;
  return merges == g.vertex_count() - 1;
}

bool is_tree(const Ball& ball) {
  if (ball.vertices.empty()) return false;
  if (ball.induced_edges.size() != ball.vertices.size() - 1) return false;
  // Relabel to compact ids for the union-find.
  std::size_t merges = 0;
  UnionFind uf(ball.vertices.size());
  auto index_of = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(ball.vertices.begin(), ball.vertices.end(), v) -
        ball.vertices.begin());
  };
  for (const Edge& e : ball.induced_edges) {
    merges += uf.unite(index_of(e.u), index_of(e.v)) ? 1 : 0;
  }
  return merges == ball.vertices.size() - 1;
}

std::int32_t tree_like_radius(const Graph& g, Vertex center, std::int32_t d_max) {
  if (center >= g.vertex_count()) throw domain_error("center out of range");
  if (d_max < 0) throw domain_error("d_max must be nonnegative");

  SeedSet single({center}, g.vertex_count());
  DistanceMap dist = bfs_distances(g, single);
  std::int32_t ecc = dist.max_finite();
  std::int32_t limit = std::min(d_max, ecc);

  // N_d is a tree iff |edges with both endpoints within d| == |N_d| - 1.
  // Tree-ness is downward closed in d: a cycle inside N_d persists in N_{d+1}.
  std::vector<std::int64_t> vertex_hist(static_cast<std::size_t>(ecc) + 1, 0);
  std::vector<std::int64_t> edge_hist(static_cast<std::size_t>(ecc) + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (dist.reachable(v)) ++vertex_hist[static_cast<std::size_t>(dist[v])];
  }
  for (const Edge& e : g.edges()) {
    if (dist.reachable(e.u) && dist.reachable(e.v)) {
      ++edge_hist[static_cast<std::size_t>(std::max(dist[e.u], dist[e.v]))];
    }
  }
  std::int64_t vertices_within = 0;
  std::int64_t edges_within = 0;
  std::int32_t best = 0;
  for (std::int32_t d = 0; d <= limit; ++d) {
    vertices_within += vertex_hist[static_cast<std::size_t>(d)];
    edges_within += edge_hist[static_cast<std::size_t>(d)];
    if (edges_within != vertices_within - 1) break;
    best = d;
  }
  return best;
}

DegreeStats degree_stats(const Graph& g) {
  if (g.vertex_count() == 0) throw domain_error("degree_stats needs n >= 1");
  DegreeStats s;
  s.min = g.degree(0);
  s.max = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    s.min = std::min(s.min, g.degree(v));
    s.max = std::max(s.max, g.degree(v));
  }
  s.mean = 2.0 * static_cast<double>(g.edge_count()) /
           static_cast<double>(g.vertex_count());
  return s;
}

}  // namespace epibound
