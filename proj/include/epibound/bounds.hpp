#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epibound/graph.hpp"
#include "epibound/simulate.hpp"

namespace epibound {

/// BFS lower bound on E[Y]: sum over reachable v of beta^dist(v, seeds),
/// the exact epidemic mean on any BFS spanning forest rooted at the
/// seeds. Unreachable vertices contribute 0. Valid for all beta in (0,1).
double lower_bound(const Graph& g, const SeedSet& seeds, double beta);

/// Degree upper bound k/(1 - beta*Delta); empty when beta*Delta >= 1.
std::optional<double> upper_bound_degree(const Graph& g, std::size_t k,
                                         double beta);

/// Exact mean on the rooted regular tree of height m whose root has r-1
/// children and whose internal vertices have degree r. Satisfies
/// mu_m = 1 + (r-1)*beta*mu_{m-1}.
double cf_rary_tree_mu(unsigned r, unsigned m, double beta);

/// Height limit of cf_rary_tree_mu: 1/(1-(r-1)beta), for (r-1)beta < 1.
double cf_rooted_reg_tree_limit(unsigned r, double beta);

/// Mean on the infinite r-regular tree rooted at a degree-r vertex:
/// (1+beta)/(1-(r-1)beta), for (r-1)beta < 1.
double cf_reg_tree_root(unsigned r, double beta);

/// Single-seed lower bound on the odd cycle C_n:
/// 1 + 2(beta + ... + beta^{(n-1)/2}). Rejects even n.
double cf_cycle_lb(Vertex n, double beta);

/// Single-seed lower bound on the d-cube: (1+beta)^d.
double cf_cube_lb(unsigned d, double beta);

/// Mean total progeny of a Galton-Watson tree with offspring mean c under
/// infection beta: 1/(1-beta*c), for beta*c < 1.
double cf_gw_mean(double c, double beta);

/// The two-step complete-graph lower bound on E[Y^{K_n}], kept exactly in
/// its displayed form (the cancelling (n-1)beta terms included).
double cf_kn_lower(Vertex n, double beta);

/// Upper bound on E[Y] - LB for graphs of maximum degree delta whose
/// radius-d ball around the seed is a tree except with probability
/// p_fail: beta^d/(1-beta*delta)^2 + p_fail/(1-beta*delta).
double gap_bound_thm3(double beta, unsigned delta, unsigned d, double p_fail);

struct BoundDiagnostics {
  Vertex max_degree = 0;
  /// tree_like_radius at each seed, in seed order.
  std::vector<std::int32_t> seed_tree_radius;
};

struct BoundReport {
  double lb = 0.0;
  std::optional<double> ub_degree;
  std::string ub_absent_reason;  // set when ub_degree is empty
  std::optional<double> exact;
  std::optional<Estimate> estimate;
  double beta = 0.0;
  std::size_t k = 0;
  std::uint64_t n = 0;
  BoundDiagnostics diagnostics;
};

struct ReportOptions {
  bool with_exact = false;      // brute force (or tree identity when it applies)
  bool with_estimate = false;   // Monte Carlo
  std::uint64_t master_seed = 0;
  std::uint64_t trials = 10'000;
  Method method = Method::percolation;
  unsigned jobs = 1;
};

BoundReport make_report(const Graph& g, const SeedSet& seeds, double beta,
                        const ReportOptions& options = {});

}  // namespace epibound
