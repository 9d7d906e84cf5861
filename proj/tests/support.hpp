#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "epibound/errors.hpp"
#include "epibound/graph.hpp"
#include "epibound/rng.hpp"

namespace epibound::testing {

// Structural invariants every Graph must satisfy.
inline void check_graph_invariants(const Graph& g) {
  std::size_t adjacency_total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    adjacency_total += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == v) throw std::logic_error("self-loop in adjacency");
      if (i > 0 && nb[i] <= nb[i - 1]) {
        throw std::logic_error("adjacency not strictly increasing");
      }
      auto back = g.neighbors(nb[i]);
      if (!std::binary_search(back.begin(), back.end(), v)) {
        throw std::logic_error("adjacency not symmetric");
      }
    }
  }
  if (adjacency_total != 2 * g.edge_count()) {
    throw std::logic_error("edge count mismatch");
  }
}

// Uniform labeled tree on n vertices via a random Pruefer sequence.
inline Graph random_tree(Vertex n, RngStream& rng) {
  if (n == 1) return Graph::from_edge_list(1, {});
  if (n == 2) return Graph::from_edge_list(2, std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
  std::vector<Vertex> pruefer(n - 2);
  for (auto& a : pruefer) a = static_cast<Vertex>(rng.uniform_below(n));
  std::vector<int> degree(n, 1);
  for (Vertex a : pruefer) ++degree[a];
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n - 1);
  // Standard decode: repeatedly join the smallest leaf to the next label.
  std::vector<bool> used(n, false);
  for (Vertex a : pruefer) {
    Vertex leaf = 0;
    while (degree[leaf] != 1 || used[leaf]) ++leaf;
    edges.emplace_back(leaf, a);
    used[leaf] = true;
    --degree[a];
  }
  Vertex u = 0;
  while (degree[u] != 1 || used[u]) ++u;
  Vertex v = u + 1;
  while (v < n && (degree[v] != 1 || used[v])) ++v;
  edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

// Connected graph: a random spanning tree plus extra random edges.
inline Graph random_connected_graph(Vertex n, std::size_t extra_edges,
                                    RngStream& rng) {
  Graph tree = random_tree(n, rng);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : tree.edges()) edges.emplace_back(e.u, e.v);
  for (std::size_t i = 0; i < extra_edges; ++i) {
    auto u = static_cast<Vertex>(rng.uniform_below(n));
    auto v = static_cast<Vertex>(rng.uniform_below(n));
    if (u != v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

// Possibly disconnected graph with at most max_edges random edges.
inline Graph random_graph(Vertex n, std::size_t max_edges, RngStream& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < max_edges; ++i) {
    auto u = static_cast<Vertex>(rng.uniform_below(n));
    auto v = static_cast<Vertex>(rng.uniform_below(n));
    if (u != v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

// Relabel by a permutation: vertex v becomes perm[v].
inline Graph relabel_graph(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph::from_edge_list(g.vertex_count(), edges);
}

inline std::vector<Vertex> random_permutation(Vertex n, RngStream& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.uniform_below(i)]);
  }
  return perm;
}

// k distinct random vertices, ascending.
inline std::vector<Vertex> random_seed_ids(Vertex n, std::size_t k,
                                           RngStream& rng) {
  if (k > n) throw std::logic_error("random_seed_ids: k > n");
  std::vector<Vertex> ids;
  while (ids.size() < k) {
    auto v = static_cast<Vertex>(rng.uniform_below(n));
    if (std::find(ids.begin(), ids.end(), v) == ids.end()) ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace epibound::testing
