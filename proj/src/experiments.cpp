#include "epibound/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "epibound/bounds.hpp"
#include "epibound/errors.hpp"
#include "epibound/generators.hpp"
#include "epibound/rng.hpp"

namespace epibound {

Family family_from_name(const std::string& name) {
  if (name == "cycle") return Family::cycle;
  if (name == "generalized_cycle" || name == "generalized-cycle") {
    return Family::generalized_cycle;
  }
  if (name == "random_regular" || name == "random-regular") {
    return Family::random_regular;
  }
  if (name == "hypercube") return Family::hypercube;
  if (name == "complete") return Family::complete;
  throw domain_error("unknown family '" + name + "'");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::cycle: return "cycle";
    case Family::generalized_cycle: return "generalized_cycle";
    case Family::random_regular: return "random_regular";
    case Family::hypercube: return "hypercube";
    case Family::complete: return "complete";
  }
  return "?";
}

void ExperimentSpec::validate() const {
  if (sizes.empty()) throw domain_error("experiment needs a nonempty size grid");
  if (betas.empty()) throw domain_error("experiment needs a nonempty beta grid");
  for (double b : betas) {
    if (!(b > 0.0 && b < 1.0)) throw domain_error("beta must be in (0,1)");
  }
  if (k < 1) throw domain_error("seed count k must be >= 1");
  if (graphs_per_cell < 1) throw domain_error("graphs_per_cell must be >= 1");
  if (trials < graphs_per_cell) {
    throw domain_error("trials must be >= graphs_per_cell");
  }
  for (std::uint64_t size : sizes) {
    std::uint64_t n = size;
    switch (family) {
      case Family::cycle:
        if (size < 3) throw domain_error("cycle needs n >= 3");
        break;
      case Family::generalized_cycle:
        if (size < 3) throw domain_error("generalized cycle needs n >= 3");
        if (2 * chords > size) throw domain_error("need 2*chords <= n");
        break;
      case Family::random_regular:
        if (r >= size) throw domain_error("random regular needs r < n");
        if ((size * r) % 2 != 0) {
          throw domain_error("random regular needs n*r even for every n "
                             "in the grid (n=" + std::to_string(size) + ")");
        }
        break;
      case Family::hypercube:
        if (size < 1 || size > 20) throw domain_error("hypercube needs 1 <= d <= 20");
        n = std::uint64_t{1} << size;
        break;
      case Family::complete:
        if (size < 1) throw domain_error("complete graph needs n >= 1");
        break;
    }
    if (k > n) throw domain_error("seed count k exceeds a grid size");
  }
}

namespace {

constexpr std::int32_t kTreeRadiusCap = 60;

Graph build_family_graph(const ExperimentSpec& spec, std::uint64_t size,
                         RngStream& rng) {
  switch (spec.family) {
    case Family::cycle:
      return gen_cycle(static_cast<Vertex>(size));
    case Family::generalized_cycle:
      return gen_generalized_cycle(static_cast<Vertex>(size), spec.chords, rng);
    case Family::random_regular:
      return gen_random_regular(static_cast<Vertex>(size), spec.r, rng);
    case Family::hypercube:
      return gen_hypercube(static_cast<unsigned>(size));
    case Family::complete:
      return gen_complete(static_cast<Vertex>(size));
  }
  throw domain_error("unreachable family");
}

std::optional<double> family_limit(const ExperimentSpec& spec, double beta) {
  switch (spec.family) {
    case Family::cycle:
    case Family::generalized_cycle:
      return static_cast<double>(spec.k) * (1.0 + beta) / (1.0 - beta);
    case Family::random_regular: {
      const double x = (spec.r - 1) * beta;
      if (x >= 1.0) return std::nullopt;
      return static_cast<double>(spec.k) * (1.0 + beta) / (1.0 - x);
    }
    case Family::hypercube:
    case Family::complete:
      return std::nullopt;
  }
  return std::nullopt;
}

double pow_int(double x, std::int64_t e) {
  double p = 1.0;
  for (std::int64_t i = 0; i < e; ++i) p *= x;
  return p;
}

// Seed geometry: per-seed tree-like radii, min pairwise distance, and the
// Theorem-6 style flag (two balls of the certified radius would overlap).
void fill_seed_diagnostics(const Graph& g, const SeedSet& seeds,
                           ExperimentRow& row) {
  std::int32_t radius_min = kTreeRadiusCap;
  for (Vertex s : seeds.ids()) {
    radius_min = std::min(radius_min, tree_like_radius(g, s, kTreeRadiusCap));
  }
  row.tree_radius_min = radius_min;
  row.flagged = false;
  if (seeds.size() < 2) return;

  std::int64_t min_dist = -1;
  auto ids = seeds.ids();
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    DistanceMap dist = bfs_distances(g, SeedSet({ids[i]}, g.vertex_count()));
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!dist.reachable(ids[j])) continue;
      std::int64_t d = dist[ids[j]];
      if (min_dist < 0 || d < min_dist) min_dist = d;
    }
  }
  if (min_dist >= 0) {
    row.min_seed_distance = min_dist;
    row.flagged = min_dist <= 2 * static_cast<std::int64_t>(radius_min);
  }
}

ExperimentRow make_rep_row(const ExperimentSpec& spec, std::uint64_t size,
                           std::size_t cell, double beta, std::size_t rep,
                           std::uint64_t trials_rep) {
  // Stream layout per replicate: purpose 0 grows the graph, 1 places the
  // seeds, 2 keys the trial streams.
  std::uint64_t graph_key = derive_seed_path(spec.master_seed, {cell, rep, 0});
  std::uint64_t seed_key = derive_seed_path(spec.master_seed, {cell, rep, 1});
  std::uint64_t trial_key = derive_seed_path(spec.master_seed, {cell, rep, 2});

  RngStream g_rng(graph_key, 0);
  Graph g = build_family_graph(spec, size, g_rng);

  RngStream s_rng(seed_key, 0);
  SeedSet seeds(sample_vertices(g.vertex_count(), spec.k, s_rng),
                g.vertex_count());

  ExperimentRow row;
  row.family = family_name(spec.family);
  row.n = g.vertex_count();
  row.beta = beta;
  row.k = spec.k;
  row.rep = rep;
  row.trials = trials_rep;
  row.lb = lower_bound(g, seeds, beta);
  row.limit = family_limit(spec, beta);
  fill_seed_diagnostics(g, seeds, row);

  EpidemicParams params{beta, trial_key, trials_rep};
  TrialSums sums = accumulate_trials(g, seeds, params, spec.method, spec.jobs);
  Estimate est = estimate_from_sums(sums, trials_rep, beta, trial_key);
  row.mc_mean = est.mean;
  row.mc_se = est.std_error;
  row.gap = row.mc_mean - row.lb;
  row.sum_y = sums.sum_y;
  row.sum_y2 = sums.sum_y2;
  return row;
}

}  // namespace

std::vector<ExperimentRow> run_convergence(const ExperimentSpec& spec) {
  spec.validate();
  std::vector<ExperimentRow> rows;
  std::size_t cell = 0;
  for (std::uint64_t size : spec.sizes) {
    for (double beta : spec.betas) {
      for (std::size_t rep = 0; rep < spec.graphs_per_cell; ++rep) {
        std::uint64_t trials_rep = spec.trials / spec.graphs_per_cell +
                                   (rep < spec.trials % spec.graphs_per_cell);
        rows.push_back(make_rep_row(spec, size, cell, beta, rep, trials_rep));
      }
      ++cell;
    }
  }
  return rows;
}

std::vector<ExperimentRow> run_sandwich(const ExperimentSpec& spec) {
  if (spec.family != Family::cycle && spec.family != Family::generalized_cycle) {
    throw domain_error("run_sandwich needs a family with a certified tree "
                       "radius (cycle or generalized_cycle)");
  }
  std::vector<ExperimentRow> rows = run_convergence(spec);
  for (ExperimentRow& row : rows) {
    auto requested = spec.alpha.value_or(
        static_cast<std::int32_t>(row.n / 3));
    if (requested < 1) requested = 1;
    // Certify the radius on the actual graph: balls must be trees.
    auto certified = std::min(requested, row.tree_radius_min);
    row.alpha = certified;
    double rhs = row.lb * (1.0 + pow_int(row.beta, certified) *
                                     static_cast<double>(row.n)) +
                 3.0 * row.mc_se;
    row.sandwich_rhs = rhs;
    row.sandwich_ok =
        row.lb <= row.mc_mean + 3.0 * row.mc_se && row.mc_mean <= rhs;
  }
  return rows;
}

std::vector<ExperimentRow> run_kn_gap(const ExperimentSpec& spec) {
  if (spec.family != Family::complete) {
    throw domain_error("run_kn_gap runs on the complete family");
  }
  if (spec.k != 1) throw domain_error("run_kn_gap uses a single seed");
  std::vector<ExperimentRow> rows = run_convergence(spec);
  for (ExperimentRow& row : rows) {
    row.gap_ratio = row.gap / row.lb;
    row.kn_two_step_lb = cf_kn_lower(static_cast<Vertex>(row.n), row.beta);
  }
  return rows;
}

namespace {

void put_opt(std::ostream& out, const std::optional<double>& v) {
  if (v) out << format_double(*v);
}

}  // namespace

void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "family,n,beta,k,rep,trials,lb,mc_mean,mc_se,limit,gap,gap_ratio,"
         "alpha,sandwich_rhs,sandwich_ok,tree_radius_min,min_seed_distance,"
         "flagged,kn_two_step_lb\n";
  for (const ExperimentRow& r : rows) {
    out << r.family << ',' << r.n << ',' << format_double(r.beta) << ',' << r.k
        << ',' << r.rep << ',' << r.trials << ',' << format_double(r.lb) << ','
        << format_double(r.mc_mean) << ',' << format_double(r.mc_se) << ',';
    put_opt(out, r.limit);
    out << ',' << format_double(r.gap) << ',';
    put_opt(out, r.gap_ratio);
    out << ',';
    if (r.alpha) out << *r.alpha;
    out << ',';
    put_opt(out, r.sandwich_rhs);
    out << ',';
    if (r.sandwich_ok) out << (*r.sandwich_ok ? "true" : "false");
    out << ',' << r.tree_radius_min << ',';
    if (r.min_seed_distance) out << *r.min_seed_distance;
    out << ',' << (r.flagged ? "true" : "false") << ',';
    put_opt(out, r.kn_two_step_lb);
    out << '\n';
  }
}

ordered_json summarize_rows(const ExperimentSpec& spec, const std::string& mode,
                            const std::vector<ExperimentRow>& rows) {
  ordered_json cells = ordered_json::array();
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j].n == rows[i].n &&
           rows[j].beta == rows[i].beta) {
      ++j;
    }
    double lb_sum = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t sum_y = 0;
    std::uint64_t sum_y2 = 0;
    std::uint64_t unflagged_trials = 0;
    std::uint64_t unflagged_sum_y = 0;
    std::uint64_t unflagged_sum_y2 = 0;
    std::size_t flagged_rows = 0;
    bool sandwich_all_ok = true;
    for (std::size_t t = i; t < j; ++t) {
      const ExperimentRow& r = rows[t];
      lb_sum += r.lb;
      trials += r.trials;
      sum_y += r.sum_y;
      sum_y2 += r.sum_y2;
      if (r.flagged) {
        ++flagged_rows;
      } else {
        unflagged_trials += r.trials;
        unflagged_sum_y += r.sum_y;
        unflagged_sum_y2 += r.sum_y2;
      }
      if (r.sandwich_ok && !*r.sandwich_ok) sandwich_all_ok = false;
    }
    auto pooled = [](std::uint64_t t, std::uint64_t s1, std::uint64_t s2) {
      ordered_json out;
      if (t == 0) return out;
      const auto tn = static_cast<long double>(t);
      const auto s1l = static_cast<long double>(s1);
      out["trials"] = t;
      out["mc_mean"] = static_cast<double>(s1l / tn);
      if (t > 1) {
        long double var = (static_cast<long double>(s2) - s1l * s1l / tn) / (tn - 1);
        if (var < 0) var = 0;
        out["mc_se"] = static_cast<double>(std::sqrt(var / tn));
      }
      return out;
    };
    ordered_json cell;
    cell["n"] = rows[i].n;
    cell["beta"] = rows[i].beta;
    cell["k"] = rows[i].k;
    cell["rows"] = j - i;
    cell["flagged_rows"] = flagged_rows;
    cell["lb_mean"] = lb_sum / static_cast<double>(j - i);
    cell["all"] = pooled(trials, sum_y, sum_y2);
    cell["unflagged"] = pooled(unflagged_trials, unflagged_sum_y, unflagged_sum_y2);
    if (rows[i].limit) cell["limit"] = *rows[i].limit;
    if (mode == "sandwich") cell["sandwich_ok"] = sandwich_all_ok;
    if (mode == "kn_gap" && trials > 0) {
      double lb_mean = lb_sum / static_cast<double>(j - i);
      double mc_mean = static_cast<double>(static_cast<long double>(sum_y) /
                                           static_cast<long double>(trials));
      cell["gap_ratio"] = (mc_mean - lb_mean) / lb_mean;
      cell["gap_ratio_floor"] = (1.0 - rows[i].beta) / rows[i].beta;
      if (rows[i].kn_two_step_lb) cell["two_step_lb"] = *rows[i].kn_two_step_lb;
    }
    cells.push_back(std::move(cell));
    i = j;
  }

  ordered_json spec_echo;
  spec_echo["family"] = family_name(spec.family);
  if (spec.family == Family::random_regular) spec_echo["r"] = spec.r;
  if (spec.family == Family::generalized_cycle) spec_echo["chords"] = spec.chords;
  spec_echo["sizes"] = spec.sizes;
  spec_echo["betas"] = spec.betas;
  spec_echo["k"] = spec.k;
  spec_echo["trials"] = spec.trials;
  spec_echo["graphs_per_cell"] = spec.graphs_per_cell;
  spec_echo["method"] = method_name(spec.method);

  ordered_json summary;
  summary["mode"] = mode;
  summary["master_seed"] = spec.master_seed;
  summary["params"] = std::move(spec_echo);
  summary["cells"] = std::move(cells);
  return summary;
}

}  // namespace epibound
