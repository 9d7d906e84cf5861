#include "epibound/bounds.hpp"

#include <cmath>
#include <string>

#include "epibound/errors.hpp"
#include "epibound/exact.hpp"

namespace epibound {

namespace {

void check_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw domain_error("beta must lie in the open interval (0,1)");
  }
}

// x^e by repeated multiplication; exponents here are graph distances,
// so underflow to 0 is fine (it only slackens a lower bound).
double int_pow(double x, std::uint64_t e) {
  double p = 1.0;
  for (std::uint64_t i = 0; i < e; ++i) p *= x;
  return p;
}

}  // namespace

double lower_bound(const Graph& g, const SeedSet& seeds, double beta) {
  check_beta(beta);
  DistanceMap dist = bfs_distances(g, seeds);
  std::vector<std::uint64_t> count_at(
      static_cast<std::size_t>(dist.max_finite()) + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (dist.reachable(v)) ++count_at[static_cast<std::size_t>(dist[v])];
  }
  long double total = 0.0L;
  long double power = 1.0L;
  for (std::size_t d = 0; d < count_at.size(); ++d) {
    total += static_cast<long double>(count_at[d]) * power;
    power *= beta;
  }
  return static_cast<double>(total);
}

std::optional<double> upper_bound_degree(const Graph& g, std::size_t k,
                                         double beta) {
  check_beta(beta);
  if (k < 1) throw domain_error("seed count k must be >= 1");
  const auto delta = static_cast<double>(degree_stats(g).max);
  if (beta * delta >= 1.0) return std::nullopt;
  return static_cast<double>(k) / (1.0 - beta * delta);
}

double cf_rary_tree_mu(unsigned r, unsigned m, double beta) {
  if (r < 2) throw domain_error("regular tree needs r >= 2");
  check_beta(beta);
  const double x = (r - 1) * beta;
  if (x == 1.0) return static_cast<double>(m) + 1.0;
  return (int_pow(x, m + 1) - 1.0) / (x - 1.0);
}

double cf_rooted_reg_tree_limit(unsigned r, double beta) {
  if (r < 2) throw domain_error("regular tree needs r >= 2");
  check_beta(beta);
  const double x = (r - 1) * beta;
  if (x >= 1.0) {
    throw domain_error("rooted regular tree limit needs (r-1)*beta < 1");
  }
  return 1.0 / (1.0 - x);
}

double cf_reg_tree_root(unsigned r, double beta) {
  if (r < 2) throw domain_error("regular tree needs r >= 2");
  check_beta(beta);
  const double x = (r - 1) * beta;
  if (x >= 1.0) {
    throw domain_error("regular tree mean needs (r-1)*beta < 1");
  }
  return (1.0 + beta) / (1.0 - x);
}

double cf_cycle_lb(Vertex n, double beta) {
  if (n < 3) throw domain_error("cycle needs n >= 3");
  if (n % 2 == 0) {
    throw domain_error("cf_cycle_lb is stated for odd n only; use "
                       "lower_bound on the generated cycle for even n");
  }
  check_beta(beta);
  long double sum = 0.0L;
  long double power = 1.0L;
  for (Vertex j = 1; j <= (n - 1) / 2; ++j) {
    power *= beta;
    sum += power;
  }
  return static_cast<double>(1.0L + 2.0L * sum);
}

double cf_cube_lb(unsigned d, double beta) {
  if (d < 1) throw domain_error("cube needs d >= 1");
  check_beta(beta);
  return int_pow(1.0 + beta, d);
}

double cf_gw_mean(double c, double beta) {
  if (c <= 0.0) throw domain_error("offspring mean must be positive");
  check_beta(beta);
  if (beta * c >= 1.0) {
    throw domain_error("Galton-Watson mean is infinite for beta*c >= 1");
  }
  return 1.0 / (1.0 - beta * c);
}

double cf_kn_lower(Vertex n, double beta) {
  if (n < 2) throw domain_error("complete-graph bound needs n >= 2");
  check_beta(beta);
  const double nm1 = static_cast<double>(n) - 1.0;
  const double q2 = 1.0 - beta * beta;
  // Kept term-for-term as displayed, including the cancelling pair.
  return 1.0 + nm1 * beta + nm1 - nm1 * int_pow(q2, n - 1) - nm1 * beta +
         nm1 * beta * (1.0 - beta) * int_pow(q2, n - 2);
}

double gap_bound_thm3(double beta, unsigned delta, unsigned d, double p_fail) {
  check_beta(beta);
  if (d < 1) throw domain_error("gap bound needs d >= 1");
  if (p_fail < 0.0 || p_fail > 1.0) {
    throw domain_error("p_fail must lie in [0,1]");
  }
  const double slack = 1.0 - beta * static_cast<double>(delta);
  if (slack <= 0.0) throw domain_error("gap bound needs beta*delta < 1");
  return int_pow(beta, d) / (slack * slack) + p_fail / slack;
}

BoundReport make_report(const Graph& g, const SeedSet& seeds, double beta,
                        const ReportOptions& options) {
  check_beta(beta);
  BoundReport report;
  report.beta = beta;
  report.k = seeds.size();
  report.n = g.vertex_count();
  report.lb = lower_bound(g, seeds, beta);

  const DegreeStats stats = degree_stats(g);
  report.diagnostics.max_degree = stats.max;
  report.ub_degree = upper_bound_degree(g, seeds.size(), beta);
  if (!report.ub_degree) {
    report.ub_absent_reason =
        "beta*Delta = " + std::to_string(beta * stats.max) + " >= 1";
  }
  const auto d_cap = static_cast<std::int32_t>(g.vertex_count());
  for (Vertex s : seeds.ids()) {
    report.diagnostics.seed_tree_radius.push_back(tree_like_radius(g, s, d_cap));
  }

  if (options.with_exact) {
    // The tree identity covers forests of any size; everything else goes
    // through the capped brute force, whose refusal propagates.
    try {
      report.exact = exact_mean_tree(g, seeds, beta);
    } catch (const domain_error&) {
      report.exact = exact_mean_bruteforce(g, seeds, beta);
    }
  }
  if (options.with_estimate) {
    EpidemicParams params{beta, options.master_seed, options.trials};
    report.estimate =
        estimate_mean(g, seeds, params, options.method, options.jobs);
  }
  return report;
}

}  // namespace epibound
