#pragma once

#include <cstdint>
#include <vector>

#include "epibound/graph.hpp"
#include "epibound/rng.hpp"

namespace epibound {

Graph gen_cycle(Vertex n);
Graph gen_path(Vertex n);
Graph gen_complete(Vertex n);

/// d-dimensional hypercube: 2^d vertices (id = bitmask), edges between
/// masks at Hamming distance 1.
Graph gen_hypercube(unsigned d);

struct RootedTree {
  Graph graph;
  Vertex root = 0;
};

/// Rooted regular tree of the given height: the root has r-1 children and
/// every internal non-root vertex has r-1 children (total degree r), so
/// the vertex count is sum of (r-1)^j for j = 0..height. Ids in BFS order.
RootedTree gen_rary_tree(unsigned r, unsigned height);

/// Cycle C_n plus a uniform perfect matching on 2*chords vertices sampled
/// without replacement; the whole sample is rejected and redrawn whenever
/// a chord would duplicate a cycle edge. Maximum degree 3.
Graph gen_generalized_cycle(Vertex n, std::size_t chords, RngStream& rng);

enum class RegularSampling {
  /// Configuration model with whole-graph rejection of loops and
  /// multi-edges: exactly uniform over simple r-regular graphs.
  exact_rejection,
  /// Pair stubs, then repair collisions by random double-edge swaps.
  /// Not uniform; intended for larger r where rejection stalls.
  approximate_repair,
};

Graph gen_random_regular(Vertex n, unsigned r, RngStream& rng,
                         RegularSampling mode = RegularSampling::exact_rejection);

struct GwConfig {
  /// offspring_pmf[j] = P(j children), j = 0..K.
  std::vector<double> offspring_pmf;
  unsigned depth_cap = 60;
  std::size_t size_cap = 1'000'000;

  double mean() const;
  void validate() const;
};

struct GwTree {
  Graph graph;
  Vertex root = 0;
  bool truncated = false;
};

/// Galton-Watson family tree started from one individual, truncated at
/// the depth or size cap, whichever hits first.
GwTree gen_gw_tree(const GwConfig& cfg, RngStream& rng);

/// k distinct vertices drawn uniformly from [0, n), ascending.
std::vector<Vertex> sample_vertices(Vertex n, std::size_t k, RngStream& rng);

}  // namespace epibound
