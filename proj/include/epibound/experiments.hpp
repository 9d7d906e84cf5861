#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "epibound/graph.hpp"
#include "epibound/io.hpp"
#include "epibound/simulate.hpp"

namespace epibound {

enum class Family { cycle, generalized_cycle, random_regular, hypercube, complete };

Family family_from_name(const std::string& name);
const char* family_name(Family f);

struct ExperimentSpec {
  Family family = Family::cycle;
  unsigned r = 3;           // random_regular only
  std::size_t chords = 1;   // generalized_cycle only
  /// n for most families; the dimension d for hypercube.
  std::vector<std::uint64_t> sizes;
  std::vector<double> betas;
  std::size_t k = 1;
  /// Trials per (size, beta) cell, split across graph replicates.
  std::uint64_t trials = 10'000;
  std::uint64_t master_seed = 0;
  std::size_t graphs_per_cell = 5;
  Method method = Method::percolation;
  /// Sandwich radius; defaults to floor(n/3), then self-certifies by
  /// shrinking to the smallest tree-like radius among the seeds.
  std::optional<std::int32_t> alpha;
  unsigned jobs = 1;

  void validate() const;
};

struct ExperimentRow {
  std::string family;
  std::uint64_t n = 0;
  double beta = 0.0;
  std::size_t k = 1;
  std::size_t rep = 0;
  std::uint64_t trials = 0;
  double lb = 0.0;
  double mc_mean = 0.0;
  double mc_se = 0.0;
  std::optional<double> limit;
  double gap = 0.0;  // mc_mean - lb
  std::optional<double> gap_ratio;       // kn-gap mode: (mc_mean - lb)/lb
  std::optional<std::int32_t> alpha;     // sandwich mode: certified radius
  std::optional<double> sandwich_rhs;    // lb*(1 + beta^alpha*n) + 3*mc_se
  std::optional<bool> sandwich_ok;
  std::int32_t tree_radius_min = 0;      // min over seeds
  std::optional<std::int64_t> min_seed_distance;
  bool flagged = false;                  // close seeds (forest hypothesis at risk)
  std::optional<double> kn_two_step_lb;  // kn-gap mode

  // Aggregation internals (not part of the CSV schema).
  std::uint64_t sum_y = 0;
  std::uint64_t sum_y2 = 0;
};

/// One row per (cell, graph replicate): sampled graph and seed set,
/// BFS lower bound, Monte Carlo estimate, and the family's closed-form
/// limit when it has one.
std::vector<ExperimentRow> run_convergence(const ExperimentSpec& spec);

/// Cycle and generalized-cycle only: adds the certified-radius sandwich
/// check lb <= mc_mean <= lb*(1 + beta^alpha*n) + 3*mc_se per row.
std::vector<ExperimentRow> run_sandwich(const ExperimentSpec& spec);

/// Complete graphs: relative gap (mc_mean - lb)/lb per size against the
/// asymptotic floor (1-beta)/beta, plus the two-step closed-form bound.
std::vector<ExperimentRow> run_kn_gap(const ExperimentSpec& spec);

void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

/// Per-cell aggregates (pooled means, flag counts) plus a spec echo.
ordered_json summarize_rows(const ExperimentSpec& spec, const std::string& mode,
                            const std::vector<ExperimentRow>& rows);

}  // namespace epibound
