#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epibound/errors.hpp"
#include "epibound/graph.hpp"
#include "epibound/rng.hpp"

namespace epibound {

struct EpidemicParams {
  double beta = 0.5;
  std::uint64_t master_seed = 0;
  std::uint64_t trials = 1;

  void validate() const {
    if (!(beta > 0.0 && beta < 1.0)) {
      throw domain_error("beta must lie in the open interval (0,1)");
    }
    if (trials < 1) throw domain_error("trials must be >= 1");
  }
};

struct EpidemicOutcome {
  std::uint64_t ever_infected = 0;
  std::uint32_t extinction_time = 0;
  /// Infected set per step; filled only when recording was requested.
  std::vector<std::vector<Vertex>> steps;
};

enum class Method { process, percolation };

Method method_from_name(const std::string& name);
const char* method_name(Method m);

namespace detail {

/// Reusable per-thread buffers so a trial allocates nothing.
struct SimScratch {
  std::vector<std::uint8_t> edge_open;       // one byte per edge
  std::vector<std::uint32_t> visit_stamp;    // per vertex
  std::vector<std::int32_t> level;           // valid where stamped
  std::vector<Vertex> queue;
  std::vector<Vertex> next;
  std::uint32_t stamp = 0;

  void bind(const Graph& g) {
    edge_open.assign(g.edge_count(), 0);
    visit_stamp.assign(g.vertex_count(), 0);
    level.assign(g.vertex_count(), 0);
    stamp = 0;
  }
};

/// One bond-percolation trial. Every edge gets exactly one coin, flipped
/// in canonical edge-id order, so two runs sharing a stream share the
/// same per-edge uniforms (the coupling the monotonicity tests rely on).
/// Y is the size of the union of open clusters containing the seeds;
/// extinction time is 1 + the largest open distance inside that union.
template <class Rng>
EpidemicOutcome percolation_trial(const Graph& g, const SeedSet& seeds,
                                  double beta, Rng& rng, SimScratch& ws,
                                  bool record_steps = false) {
  ++ws.stamp;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    ws.edge_open[e] = rng.bernoulli(beta) ? 1 : 0;
  }

  EpidemicOutcome out;
  ws.queue.clear();
  for (Vertex s : seeds.ids()) {
    ws.visit_stamp[s] = ws.stamp;
    ws.level[s] = 0;
    ws.queue.push_back(s);
  }
  std::int32_t max_level = 0;
  for (std::size_t head = 0; head < ws.queue.size(); ++head) {
    Vertex u = ws.queue[head];
    std::int32_t lu = ws.level[u];
    auto nbrs = g.neighbors(u);
    auto eids = g.incident_edge_ids(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      Vertex v = nbrs[i];
      if (ws.visit_stamp[v] == ws.stamp || !ws.edge_open[eids[i]]) continue;
      ws.visit_stamp[v] = ws.stamp;
      ws.level[v] = lu + 1;
      max_level = std::max(max_level, lu + 1);
      ws.queue.push_back(v);
    }
  }
  out.ever_infected = ws.queue.size();
  out.extinction_time = static_cast<std::uint32_t>(1 + max_level);
  if (record_steps) {
    out.steps.assign(static_cast<std::size_t>(max_level) + 1, {});
    for (Vertex v : ws.queue) {
      out.steps[static_cast<std::size_t>(ws.level[v])].push_back(v);
    }
  }
  return out;
}

/// One synchronous SIR trial: each infected vertex attempts each
/// neighbor that was susceptible at the start of the step with an
/// independent coin, then all infected become removed. Coins are spent
/// in (step, infector, adjacency) order, one per attempt, with no
/// short-circuiting on vertices already infected within the step.
template <class Rng>
EpidemicOutcome process_trial(const Graph& g, const SeedSet& seeds, double beta,
                              Rng& rng, SimScratch& ws,
                              bool record_steps = false) {
  ++ws.stamp;
  ws.queue.assign(seeds.ids().begin(), seeds.ids().end());
  for (Vertex s : seeds.ids()) {
    ws.visit_stamp[s] = ws.stamp;
    ws.level[s] = 0;
  }

  EpidemicOutcome out;
  std::uint64_t total = seeds.size();
  std::int32_t step = 0;
  if (record_steps) out.steps.push_back(ws.queue);
  while (!ws.queue.empty()) {
    ws.next.clear();
    for (Vertex u : ws.queue) {
      for (Vertex v : g.neighbors(u)) {
        // Susceptible at the start of this step: either untouched, or
        // infected earlier within this very step (still a coin target).
        bool untouched = ws.visit_stamp[v] != ws.stamp;
        bool infected_this_step = !untouched && ws.level[v] == step + 1;
        if (!untouched && !infected_this_step) continue;
        bool success = rng.bernoulli(beta);
        if (success && untouched) {
          ws.visit_stamp[v] = ws.stamp;
          ws.level[v] = step + 1;
          ws.next.push_back(v);
        }
      }
    }
    ++step;
    total += ws.next.size();
    std::swap(ws.queue, ws.next);
    if (record_steps && !ws.queue.empty()) out.steps.push_back(ws.queue);
  }
  out.ever_infected = total;
  out.extinction_time = static_cast<std::uint32_t>(step);
  return out;
}

}  // namespace detail

EpidemicOutcome simulate_process(const Graph& g, const SeedSet& seeds,
                                 const EpidemicParams& params,
                                 std::uint64_t trial_id,
                                 bool record_steps = false);

EpidemicOutcome simulate_percolation(const Graph& g, const SeedSet& seeds,
                                     const EpidemicParams& params,
                                     std::uint64_t trial_id,
                                     bool record_steps = false);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  /// False when trials == 1 (standard error undefined, reported as 0).
  bool se_valid = true;
  std::uint64_t trials = 0;
  double beta = 0.0;
  std::uint64_t seed = 0;
};

/// Exact integer aggregates over a block of trials, poolable by addition.
struct TrialSums {
  std::uint64_t sum_y = 0;
  std::uint64_t sum_y2 = 0;
};

/// Runs `trials` independent trials, trial t on stream (master_seed, t),
/// and accumulates Y and Y^2 as exact integers. Integer sums commute, so
/// the result is identical for any `jobs` partitioning.
TrialSums accumulate_trials(const Graph& g, const SeedSet& seeds,
                            const EpidemicParams& params, Method method,
                            unsigned jobs = 1);

/// Sample mean and standard error from pooled integer sums.
Estimate estimate_from_sums(const TrialSums& sums, std::uint64_t trials,
                            double beta, std::uint64_t seed);

/// accumulate_trials followed by estimate_from_sums.
Estimate estimate_mean(const Graph& g, const SeedSet& seeds,
                       const EpidemicParams& params, Method method,
                       unsigned jobs = 1);

}  // namespace epibound
