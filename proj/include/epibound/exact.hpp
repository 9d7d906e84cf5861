#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "epibound/graph.hpp"

namespace epibound {

inline constexpr std::size_t kBruteForceEdgeCap = 24;
inline constexpr std::size_t kDistributionEdgeCap = 20;

/// Ground-truth E[Y] by enumerating all 2^m open-edge subsets of the
/// percolation model. Refuses graphs with more than kBruteForceEdgeCap
/// edges. Per-subset terms accumulate with pairwise summation.
double exact_mean_bruteforce(const Graph& g, const SeedSet& seeds, double beta);

/// Same enumeration evaluated for a whole beta grid at once: cluster
/// sizes accumulate into exact integer totals per open-edge count, then
/// each beta weighs the totals. Agrees with exact_mean_bruteforce to
/// float roundoff and is the route to use for beta sweeps.
std::vector<double> exact_mean_bruteforce_grid(const Graph& g,
                                               const SeedSet& seeds,
                                               std::span<const double> betas);

/// Exact E[Y] on a forest via the distance-sum identity: sum over
/// reachable v of beta^dist(v). Requires every seed to sit in its own
/// component and that component to be a tree; anything else is refused
/// (overlapping clusters void the identity) and is brute-force territory.
double exact_mean_tree(const Graph& g, const SeedSet& seeds, double beta);

/// Full pmf of Y, indexed by Y = 0..n. Refuses graphs with more than
/// kDistributionEdgeCap edges.
std::vector<double> exact_distribution_bruteforce(const Graph& g,
                                                  const SeedSet& seeds,
                                                  double beta);

}  // namespace epibound
