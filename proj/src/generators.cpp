#include "epibound/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>

#include "epibound/errors.hpp"

namespace epibound {

namespace {
using EdgePair = std::pair<Vertex, Vertex>;
}

Graph gen_cycle(Vertex n) {
  if (n < 3) throw domain_error("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<EdgePair> edges;
  edges.reserve(n);
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph gen_path(Vertex n) {
  if (n < 1) throw domain_error("path needs n >= 1");
  std::vector<EdgePair> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph gen_complete(Vertex n) {
  if (n < 1) throw domain_error("complete graph needs n >= 1");
  std::vector<EdgePair> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph gen_hypercube(unsigned d) {
  if (d < 1) throw domain_error("hypercube needs d >= 1");
  if (d > 20) {
    throw domain_error("hypercube dimension " + std::to_string(d) +
                       " exceeds the supported maximum of 20");
  }
  Vertex n = Vertex{1} << d;
  std::vector<EdgePair> edges;
  edges.reserve(static_cast<std::size_t>(d) << (d - 1));
  for (Vertex x = 0; x < n; ++x) {
    for (unsigned b = 0; b < d; ++b) {
      Vertex y = x | (Vertex{1} << b);
      if (y != x) edges.emplace_back(x, y);
    }
  }
  return Graph::from_edge_list(n, edges);
}

RootedTree gen_rary_tree(unsigned r, unsigned height) {
  if (r < 2) throw domain_error("regular tree needs r >= 2");
  std::uint64_t count = 0;
  std::uint64_t level = 1;
  for (unsigned j = 0; j <= height; ++j) {
    count += level;
    if (count > 50'000'000) throw domain_error("regular tree too large");
    level *= (r - 1);
  }

  std::vector<EdgePair> edges;
  edges.reserve(count - 1);
  // Ids in BFS order: children of the current level are appended in order.
  Vertex next_id = 1;
  std::vector<Vertex> frontier{0};
  for (unsigned depth = 0; depth < height; ++depth) {
    std::vector<Vertex> next;
    next.reserve(frontier.size() * (r - 1));
    for (Vertex parent : frontier) {
      for (unsigned c = 0; c + 1 < r; ++c) {
        edges.emplace_back(parent, next_id);
        next.push_back(next_id++);
      }
    }
    frontier = std::move(next);
  }
  return RootedTree{Graph::from_edge_list(static_cast<Vertex>(count), edges), 0};
}

namespace {

// Floyd's algorithm: k distinct values from [0, n), order discarded.
std::vector<Vertex> sample_without_replacement(Vertex n, std::size_t k,
                                               RngStream& rng) {
  std::set<Vertex> chosen;
  for (std::uint64_t j = n - k; j < n; ++j) {
    auto t = static_cast<Vertex>(rng.uniform_below(j + 1));
    if (!chosen.insert(t).second) chosen.insert(static_cast<Vertex>(j));
  }
  return {chosen.begin(), chosen.end()};
}

void shuffle_in_place(std::vector<Vertex>& v, RngStream& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.uniform_below(i)]);
  }
}

}  // namespace

Graph gen_generalized_cycle(Vertex n, std::size_t chords, RngStream& rng) {
  if (n < 3) throw domain_error("generalized cycle needs n >= 3");
  if (2 * chords > n) {
    throw domain_error("generalized cycle needs 2*chords <= n");
  }
  if (chords == 0) return gen_cycle(n);

  constexpr int kMaxAttempts = 10'000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vertex> picked = sample_without_replacement(n, 2 * chords, rng);
    shuffle_in_place(picked, rng);  // consecutive pairs form a uniform matching
    bool ok = true;
    std::vector<EdgePair> edges;
    edges.reserve(n + chords);
    for (std::size_t i = 0; i < chords; ++i) {
      Vertex a = picked[2 * i];
      Vertex b = picked[2 * i + 1];
      Vertex diff = a < b ? b - a : a - b;
      if (diff == 1 || diff == n - 1) {  // chord duplicates a cycle edge
        ok = false;
        break;
      }
      edges.emplace_back(a, b);
    }
    if (!ok) continue;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
  }
  throw domain_error("generalized cycle sampling failed: no valid chord "
                     "matching found after " +
                     std::to_string(kMaxAttempts) + " attempts");
}

Graph gen_random_regular(Vertex n, unsigned r, RngStream& rng,
                         RegularSampling mode) {
  if (r >= n) throw domain_error("r-regular graph needs r < n");
  if ((static_cast<std::uint64_t>(n) * r) % 2 != 0) {
    throw domain_error("r-regular graph needs n*r even: n=" + std::to_string(n) +
                       ", r=" + std::to_string(r));
  }
  if (r == 0) return Graph::from_edge_list(n, {});

  std::vector<Vertex> stubs(static_cast<std::size_t>(n) * r);
  for (Vertex v = 0; v < n; ++v) {
    for (unsigned j = 0; j < r; ++j) stubs[static_cast<std::size_t>(v) * r + j] = v;
  }

  auto pair_up = [&](std::vector<EdgePair>& edges) {
    shuffle_in_place(stubs, rng);
    edges.clear();
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      edges.emplace_back(stubs[i], stubs[i + 1]);
    }
  };
  auto is_simple = [&](std::vector<EdgePair>& edges) {
    std::vector<EdgePair> norm(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      if (a == b) return false;
      norm[i] = a < b ? EdgePair{a, b} : EdgePair{b, a};
    }
    std::sort(norm.begin(), norm.end());
    return std::adjacent_find(norm.begin(), norm.end()) == norm.end();
  };

  std::vector<EdgePair> edges;
  if (mode == RegularSampling::exact_rejection) {
    constexpr int kMaxAttempts = 10'000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      pair_up(edges);
      if (is_simple(edges)) return Graph::from_edge_list(n, edges);
    }
    throw domain_error("configuration model rejection did not produce a "
                       "simple graph after 10000 attempts; try "
                       "approximate_repair for this (n, r)");
  }

  // approximate_repair: swap endpoints of offending pairs with random
  // partners until the multigraph is simple.
  pair_up(edges);
  std::set<EdgePair> seen;
  auto norm = [](Vertex a, Vertex b) { return a < b ? EdgePair{a, b} : EdgePair{b, a}; };
  const std::size_t max_swaps = 200 * edges.size() + 1000;
  for (std::size_t swaps = 0; swaps < max_swaps;) {
    seen.clear();
    std::size_t bad = edges.size();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      if (a == b || !seen.insert(norm(a, b)).second) {
        bad = i;
        break;
      }
    }
    if (bad == edges.size()) return Graph::from_edge_list(n, edges);
    std::size_t j = rng.uniform_below(edges.size());
    std::swap(edges[bad].second, edges[j].second);
    ++swaps;
  }
  throw domain_error("approximate_repair did not converge to a simple graph");
}

double GwConfig::mean() const {
  double c = 0.0;
  for (std::size_t j = 0; j < offspring_pmf.size(); ++j) {
    c += static_cast<double>(j) * offspring_pmf[j];
  }
  return c;
}

void GwConfig::validate() const {
  if (offspring_pmf.empty()) throw domain_error("offspring pmf must be nonempty");
  double sum = 0.0;
  for (double p : offspring_pmf) {
    if (p < 0.0) throw domain_error("offspring pmf has a negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw domain_error("offspring pmf must sum to 1 within 1e-12");
  }
  if (depth_cap < 1) throw domain_error("depth cap must be >= 1");
  if (size_cap < 1) throw domain_error("size cap must be >= 1");
}

std::vector<Vertex> sample_vertices(Vertex n, std::size_t k, RngStream& rng) {
  if (k < 1 || k > n) throw domain_error("need 1 <= k <= n to sample vertices");
  return sample_without_replacement(n, k, rng);
}

GwTree gen_gw_tree(const GwConfig& cfg, RngStream& rng) {
  cfg.validate();

  std::vector<EdgePair> edges;
  std::vector<std::pair<Vertex, unsigned>> queue{{0, 0}};  // (id, depth)
  Vertex next_id = 1;
  bool truncated = false;

  auto sample_offspring = [&]() {
    double u = rng.uniform01();
    double acc = 0.0;
    for (std::size_t j = 0; j < cfg.offspring_pmf.size(); ++j) {
      acc += cfg.offspring_pmf[j];
      if (u < acc) return j;
    }
    return cfg.offspring_pmf.size() - 1;
  };

  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [v, depth] = queue[head];
    if (depth >= cfg.depth_cap) {
      truncated = true;
      continue;
    }
    std::size_t children = sample_offspring();
    for (std::size_t c = 0; c < children; ++c) {
      if (next_id >= cfg.size_cap) {
        truncated = true;
        break;
      }
      edges.emplace_back(v, next_id);
      queue.emplace_back(next_id, depth + 1);
      ++next_id;
    }
    if (truncated && next_id >= cfg.size_cap) break;
  }
  return GwTree{Graph::from_edge_list(next_id, edges), 0, truncated};
}

}  // namespace epibound
