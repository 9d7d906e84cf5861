#include <doctest.h>

#include <cmath>
#include <vector>

#include "epibound/exact.hpp"
#include "epibound/generators.hpp"
#include "epibound/graph.hpp"
#include "epibound/simulate.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace epibound;
using namespace epibound::testing;

namespace {

// Forces every infection coin, for the deterministic edge cases.
struct FixedCoinRng {
  bool value = true;
  bool bernoulli(double) { return value; }
};

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  double tv = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - q[i]);
  return tv / 2.0;
}

}  // namespace

TEST_CASE("edgeless graph: Y = k and extinction at time 1") {
  Graph g = Graph::from_edge_list(5, {});
  SeedSet seeds({1, 3}, 5);
  EpidemicParams params{0.5, 1, 1};
  for (auto method : {Method::process, Method::percolation}) {
    EpidemicOutcome out = method == Method::process
                              ? simulate_process(g, seeds, params, 0)
                              : simulate_percolation(g, seeds, params, 0);
    CHECK(out.ever_infected == 2);
    CHECK(out.extinction_time == 1);
  }
}

TEST_CASE("forced coins: all succeed infects the whole connected graph") {
  RngStream seed_rng(3, 0);
  for (int trial = 0; trial < 10; ++trial) {
    auto n = static_cast<Vertex>(3 + seed_rng.uniform_below(10));
    Graph g = random_connected_graph(n, n, seed_rng);
    SeedSet seeds({static_cast<Vertex>(seed_rng.uniform_below(n))}, n);
    detail::SimScratch ws;
    ws.bind(g);
    FixedCoinRng all_open{true};
    CHECK(detail::percolation_trial(g, seeds, 0.5, all_open, ws).ever_infected == n);
    CHECK(detail::process_trial(g, seeds, 0.5, all_open, ws).ever_infected == n);
    FixedCoinRng all_closed{false};
    CHECK(detail::percolation_trial(g, seeds, 0.5, all_closed, ws).ever_infected == 1);
    CHECK(detail::process_trial(g, seeds, 0.5, all_closed, ws).ever_infected == 1);
  }
}

TEST_CASE("P2 process is a single coin") {
  Graph p2 = gen_path(2);
  SeedSet seeds({0}, 2);
  detail::SimScratch ws;
  ws.bind(p2);
  FixedCoinRng open{true};
  EpidemicOutcome hit = detail::process_trial(p2, seeds, 0.3, open, ws);
  CHECK(hit.ever_infected == 2);
  CHECK(hit.extinction_time == 2);
  FixedCoinRng closed{false};
  EpidemicOutcome miss = detail::process_trial(p2, seeds, 0.3, closed, ws);
  CHECK(miss.ever_infected == 1);
  CHECK(miss.extinction_time == 1);
}

TEST_CASE("extinction time equals 1 + farthest infection level") {
  Graph p3 = gen_path(3);
  SeedSet seeds({0}, 3);
  detail::SimScratch ws;
  ws.bind(p3);
  FixedCoinRng open{true};
  CHECK(detail::percolation_trial(p3, seeds, 0.9, open, ws).extinction_time == 3);
  CHECK(detail::process_trial(p3, seeds, 0.9, open, ws).extinction_time == 3);
}

TEST_CASE("recorded steps partition the ever-infected set") {
  Graph g = gen_cycle(9);
  SeedSet seeds({0, 4}, 9);
  EpidemicParams params{0.7, 11, 1};
  for (int method = 0; method < 2; ++method) {
    EpidemicOutcome out = method == 0
                              ? simulate_percolation(g, seeds, params, 0, true)
                              : simulate_process(g, seeds, params, 0, true);
    std::uint64_t counted = 0;
    for (const auto& step : out.steps) counted += step.size();
    CHECK(counted == out.ever_infected);
    CHECK(out.steps.size() == out.extinction_time);
    CHECK(out.steps[0].size() == 2);  // the seeds
    CHECK(out.ever_infected >= seeds.size());
    CHECK(out.ever_infected <= g.vertex_count());
    CHECK(out.extinction_time <= g.vertex_count());
  }
}

TEST_CASE("percolation mean matches closed forms within 3 SE") {
  // P3 from an endpoint: E[Y] = 1 + beta + beta^2.
  Graph p3 = gen_path(3);
  SeedSet s0({0}, 3);
  EpidemicParams params{0.3, 80, 200'000};
  Estimate est = estimate_mean(p3, s0, params, Method::percolation);
  double expected = 1.0 + 0.3 + 0.09;
  CHECK(std::abs(est.mean - expected) <= 3.0 * est.std_error);

  // K3 from one seed: E[Y] = 1 + 2b + 2b^2 - 2b^3.
  Graph k3 = gen_complete(3);
  EpidemicParams params2{0.5, 78, 200'000};
  Estimate est2 = estimate_mean(k3, SeedSet({0}, 3), params2, Method::percolation);
  CHECK(std::abs(est2.mean - 2.25) <= 3.0 * est2.std_error);
}

TEST_CASE("process mean matches the exact oracle on C5") {
  Graph c5 = gen_cycle(5);
  SeedSet seeds({0}, 5);
  double exact = exact_mean_bruteforce(c5, seeds, 0.5);
  EpidemicParams params{0.5, 79, 200'000};
  Estimate est = estimate_mean(c5, seeds, params, Method::process);
  CHECK(std::abs(est.mean - exact) <= 3.0 * est.std_error);
}

TEST_CASE("process enumeration equals percolation pmf on small graphs") {
  RngStream rng(101, 0);
  for (int trial = 0; trial < 8; ++trial) {
    auto n = static_cast<Vertex>(3 + rng.uniform_below(5));
    Graph g = random_graph(n, 8, rng);
    if (g.edge_count() > 10) continue;
    SeedSet seeds(random_seed_ids(n, 1 + rng.uniform_below(2), rng), n);
    for (double beta : {0.2, 0.5, 0.8}) {
      auto process_pmf = process_distribution_enum(g, seeds, beta);
      auto percolation_pmf = exact_distribution_bruteforce(g, seeds, beta);
      CHECK(total_variation(process_pmf, percolation_pmf) < 1e-10);
      double process_mean = 0.0;
      for (std::size_t y = 0; y < process_pmf.size(); ++y) {
        process_mean += static_cast<double>(y) * process_pmf[y];
      }
      CHECK(std::abs(process_mean - exact_mean_bruteforce(g, seeds, beta)) < 1e-12);
    }
  }
}

TEST_CASE("process and percolation Monte Carlo means agree") {
  RngStream rng(102, 0);
  Graph g = gen_complete(4);
  SeedSet seeds({0}, 4);
  EpidemicParams params{0.3, 103, 100'000};
  Estimate a = estimate_mean(g, seeds, params, Method::process);
  Estimate b = estimate_mean(g, seeds, params, Method::percolation);
  double combined = std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
  CHECK(std::abs(a.mean - b.mean) <= 3.0 * combined);
}

TEST_CASE("coupled percolation runs are monotone in beta") {
  // Same stream => same per-edge uniforms, so the beta cluster is a
  // subset of the beta+0.1 cluster, trial by trial.
  RngStream graph_rng(104, 0);
  for (int trial = 0; trial < 10; ++trial) {
    auto n = static_cast<Vertex>(4 + graph_rng.uniform_below(12));
    Graph g = random_graph(n, 3 * n, graph_rng);
    SeedSet seeds(random_seed_ids(n, 1, graph_rng), n);
    detail::SimScratch ws;
    ws.bind(g);
    for (double beta : {0.2, 0.45, 0.7}) {
      for (std::uint64_t t = 0; t < 50; ++t) {
        RngStream lo(900 + trial, t);
        RngStream hi(900 + trial, t);
        auto y_lo = detail::percolation_trial(g, seeds, beta, lo, ws).ever_infected;
        auto y_hi = detail::percolation_trial(g, seeds, beta + 0.1, hi, ws).ever_infected;
        CHECK(y_lo <= y_hi);
      }
    }
  }
}

TEST_CASE("estimate_mean bookkeeping") {
  Graph p2 = gen_path(2);
  SeedSet seeds({0}, 2);

  EpidemicParams one{0.5, 5, 1};
  Estimate single = estimate_mean(p2, seeds, one, Method::percolation);
  CHECK_FALSE(single.se_valid);
  CHECK(single.std_error == 0.0);
  CHECK((single.mean == 1.0 || single.mean == 2.0));

  EpidemicParams params{0.5, 6, 100'000};
  Estimate est = estimate_mean(p2, seeds, params, Method::percolation);
  CHECK(std::abs(est.mean - 1.5) <= 3.0 * est.std_error);
  CHECK(est.mean >= 1.0);
  CHECK(est.mean <= 2.0);

  // Byte-identical across repeated runs and across jobs partitionings.
  Estimate again = estimate_mean(p2, seeds, params, Method::percolation);
  CHECK(est.mean == again.mean);
  CHECK(est.std_error == again.std_error);
  Estimate parallel = estimate_mean(p2, seeds, params, Method::percolation, 4);
  CHECK(est.mean == parallel.mean);
  CHECK(est.std_error == parallel.std_error);

  EpidemicParams bad{1.0, 5, 10};
  CHECK_THROWS_AS(estimate_mean(p2, seeds, bad, Method::percolation), domain_error);
}
