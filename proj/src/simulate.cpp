#include "epibound/simulate.hpp"

#include <cmath>
#include <thread>

namespace epibound {

Method method_from_name(const std::string& name) {
  if (name == "process") return Method::process;
  if (name == "percolation") return Method::percolation;
  throw domain_error("unknown method '" + name + "' (use process|percolation)");
}

const char* method_name(Method m) {
  return m == Method::process ? "process" : "percolation";
}

EpidemicOutcome simulate_process(const Graph& g, const SeedSet& seeds,
                                 const EpidemicParams& params,
                                 std::uint64_t trial_id, bool record_steps) {
  params.validate();
  detail::SimScratch ws;
  ws.bind(g);
  RngStream rng(params.master_seed, trial_id);
  return detail::process_trial(g, seeds, params.beta, rng, ws, record_steps);
}

EpidemicOutcome simulate_percolation(const Graph& g, const SeedSet& seeds,
                                     const EpidemicParams& params,
                                     std::uint64_t trial_id, bool record_steps) {
  params.validate();
  detail::SimScratch ws;
  ws.bind(g);
  RngStream rng(params.master_seed, trial_id);
  return detail::percolation_trial(g, seeds, params.beta, rng, ws, record_steps);
}

namespace {

TrialSums run_range(const Graph& g, const SeedSet& seeds, double beta,
                    std::uint64_t master_seed, Method method, std::uint64_t t0,
                    std::uint64_t t1) {
  detail::SimScratch ws;
  ws.bind(g);
  TrialSums sums;
  for (std::uint64_t t = t0; t < t1; ++t) {
    RngStream rng(master_seed, t);
    EpidemicOutcome out =
        method == Method::percolation
            ? detail::percolation_trial(g, seeds, beta, rng, ws)
            : detail::process_trial(g, seeds, beta, rng, ws);
    sums.sum_y += out.ever_infected;
    sums.sum_y2 += out.ever_infected * out.ever_infected;
  }
  return sums;
}

}  // namespace

TrialSums accumulate_trials(const Graph& g, const SeedSet& seeds,
                            const EpidemicParams& params, Method method,
                            unsigned jobs) {
  params.validate();
  const std::uint64_t trials = params.trials;
  if (jobs < 1) jobs = 1;
  if (jobs > trials) jobs = static_cast<unsigned>(trials);

  if (jobs == 1) {
    return run_range(g, seeds, params.beta, params.master_seed, method, 0,
                     trials);
  }
  std::vector<TrialSums> parts(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    std::uint64_t t0 = trials * w / jobs;
    std::uint64_t t1 = trials * (w + 1) / jobs;
    workers.emplace_back([&, w, t0, t1] {
      parts[w] =
          run_range(g, seeds, params.beta, params.master_seed, method, t0, t1);
    });
  }
  for (auto& th : workers) th.join();
  TrialSums total;
  for (const TrialSums& p : parts) {
    total.sum_y += p.sum_y;
    total.sum_y2 += p.sum_y2;
  }
  return total;
}

Estimate estimate_from_sums(const TrialSums& sums, std::uint64_t trials,
                            double beta, std::uint64_t seed) {
  Estimate est;
  est.trials = trials;
  est.beta = beta;
  est.seed = seed;
  const auto n = static_cast<long double>(trials);
  const auto s1 = static_cast<long double>(sums.sum_y);
  const auto s2 = static_cast<long double>(sums.sum_y2);
  est.mean = static_cast<double>(s1 / n);
  if (trials == 1) {
    est.std_error = 0.0;
    est.se_valid = false;
  } else {
    long double variance = (s2 - s1 * s1 / n) / (n - 1);
    if (variance < 0) variance = 0;
    est.std_error = static_cast<double>(std::sqrt(variance / n));
  }
  return est;
}

Estimate estimate_mean(const Graph& g, const SeedSet& seeds,
                       const EpidemicParams& params, Method method,
                       unsigned jobs) {
  TrialSums sums = accumulate_trials(g, seeds, params, method, jobs);
  return estimate_from_sums(sums, params.trials, params.beta,
                            params.master_seed);
}

}  // namespace epibound
