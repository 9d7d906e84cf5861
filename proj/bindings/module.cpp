#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "epibound/bounds.hpp"
#include "epibound/errors.hpp"
#include "epibound/exact.hpp"
#include "epibound/experiments.hpp"
#include "epibound/generators.hpp"
#include "epibound/graph.hpp"
#include "epibound/rng.hpp"
#include "epibound/simulate.hpp"
#include "epibound/version.hpp"

namespace py = pybind11;
using namespace epibound;

namespace {

SeedSet make_seeds(const Graph& g, const std::vector<Vertex>& ids) {
  return SeedSet(ids, g.vertex_count());
}

Method parse_method(const std::string& name) { return method_from_name(name); }

py::dict estimate_dict(const Estimate& est) {
  py::dict d;
  d["mean"] = est.mean;
  d["std_error"] = est.std_error;
  d["se_valid"] = est.se_valid;
  d["trials"] = est.trials;
  d["beta"] = est.beta;
  d["seed"] = est.seed;
  return d;
}

py::dict outcome_dict(const EpidemicOutcome& out) {
  py::dict d;
  d["ever_infected"] = out.ever_infected;
  d["extinction_time"] = out.extinction_time;
  if (!out.steps.empty()) d["steps"] = out.steps;
  return d;
}

py::dict row_dict(const ExperimentRow& r) {
  py::dict d;
  d["family"] = r.family;
  d["n"] = r.n;
  d["beta"] = r.beta;
  d["k"] = r.k;
  d["rep"] = r.rep;
  d["trials"] = r.trials;
  d["lb"] = r.lb;
  d["mc_mean"] = r.mc_mean;
  d["mc_se"] = r.mc_se;
  d["limit"] = r.limit ? py::object(py::float_(*r.limit)) : py::none();
  d["gap"] = r.gap;
  d["tree_radius_min"] = r.tree_radius_min;
  d["min_seed_distance"] = r.min_seed_distance
                               ? py::object(py::int_(*r.min_seed_distance))
                               : py::none();
  d["flagged"] = r.flagged;
  if (r.alpha) d["alpha"] = *r.alpha;
  if (r.sandwich_rhs) d["sandwich_rhs"] = *r.sandwich_rhs;
  if (r.sandwich_ok) d["sandwich_ok"] = *r.sandwich_ok;
  if (r.gap_ratio) d["gap_ratio"] = *r.gap_ratio;
  if (r.kn_two_step_lb) d["kn_two_step_lb"] = *r.kn_two_step_lb;
  return d;
}

ExperimentSpec spec_from_kwargs(const std::string& family, unsigned r,
                                std::size_t chords,
                                std::vector<std::uint64_t> sizes,
                                std::vector<double> betas, std::size_t k,
                                std::uint64_t trials, std::uint64_t master_seed,
                                std::size_t graphs_per_cell,
                                const std::string& method,
                                std::optional<std::int32_t> alpha,
                                unsigned jobs) {
  ExperimentSpec spec;
  spec.family = family_from_name(family);
  spec.r = r;
  spec.chords = chords;
  spec.sizes = std::move(sizes);
  spec.betas = std::move(betas);
  spec.k = k;
  spec.trials = trials;
  spec.master_seed = master_seed;
  spec.graphs_per_cell = graphs_per_cell;
  spec.method = method_from_name(method);
  spec.alpha = alpha;
  spec.jobs = jobs;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "SIR epidemic bounds on finite graphs: BFS lower bound, "
            "percolation simulation, exact oracles, generators";
  m.attr("__version__") = kVersion;

  py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<cap_exceeded>(m, "CapExceeded", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return Graph::from_edge_list(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             auto nb = g.neighbors(v);
             return std::vector<Vertex>(nb.begin(), nb.end());
           })
      .def("degree", &Graph::degree)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<Vertex, Vertex>> out;
             out.reserve(g.edge_count());
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<Ball>(m, "Ball")
      .def_readonly("radius", &Ball::radius)
      .def_readonly("center", &Ball::center)
      .def_readonly("vertices", &Ball::vertices)
      .def_property_readonly("edges", [](const Ball& b) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const Edge& e : b.induced_edges) out.emplace_back(e.u, e.v);
        return out;
      });

  m.def("bfs_distances",
        [](const Graph& g, const std::vector<Vertex>& seeds) {
          return bfs_distances(g, make_seeds(g, seeds)).values();
        },
        py::arg("graph"), py::arg("seeds"),
        "Minimum distance to the seed set per vertex; -1 marks unreachable.");
  m.def("extract_ball",
        [](const Graph& g, Vertex center, std::int32_t radius) {
          return extract_ball(g, center, radius);
        },
        py::arg("graph"), py::arg("center"), py::arg("radius"));
  m.def("is_tree", [](const Graph& g) { return is_tree(g); }, py::arg("graph"));
  m.def("tree_like_radius", &tree_like_radius, py::arg("graph"),
        py::arg("center"), py::arg("d_max"));
  m.def("degree_stats",
        [](const Graph& g) {
          DegreeStats s = degree_stats(g);
          return py::make_tuple(s.min, s.max, s.mean);
        },
        py::arg("graph"), "Returns (min, max, mean) degree.");

  m.def("gen_cycle", &gen_cycle, py::arg("n"));
  m.def("gen_path", &gen_path, py::arg("n"));
  m.def("gen_complete", &gen_complete, py::arg("n"));
  m.def("gen_hypercube", &gen_hypercube, py::arg("d"));
  m.def("gen_rary_tree",
        [](unsigned r, unsigned height) {
          RootedTree t = gen_rary_tree(r, height);
          return py::make_tuple(t.graph, t.root);
        },
        py::arg("r"), py::arg("height"), "Returns (graph, root).");
  m.def("gen_generalized_cycle",
        [](Vertex n, std::size_t chords, std::uint64_t seed, std::uint64_t stream) {
          RngStream rng(seed, stream);
          return gen_generalized_cycle(n, chords, rng);
        },
        py::arg("n"), py::arg("chords"), py::arg("seed"), py::arg("stream") = 0);
  m.def("gen_random_regular",
        [](Vertex n, unsigned r, std::uint64_t seed, std::uint64_t stream,
           bool approximate) {
          RngStream rng(seed, stream);
          return gen_random_regular(n, r, rng,
                                    approximate
                                        ? RegularSampling::approximate_repair
                                        : RegularSampling::exact_rejection);
        },
        py::arg("n"), py::arg("r"), py::arg("seed"), py::arg("stream") = 0,
        py::arg("approximate") = false);
  m.def("gen_gw_tree",
        [](const std::vector<double>& pmf, unsigned depth_cap,
           std::size_t size_cap, std::uint64_t seed, std::uint64_t stream) {
          GwConfig cfg{pmf, depth_cap, size_cap};
          RngStream rng(seed, stream);
          GwTree t = gen_gw_tree(cfg, rng);
          return py::make_tuple(t.graph, t.root, t.truncated);
        },
        py::arg("offspring_pmf"), py::arg("depth_cap") = 60,
        py::arg("size_cap") = 1'000'000, py::arg("seed") = 0,
        py::arg("stream") = 0, "Returns (graph, root, truncated).");

  m.def("lower_bound",
        [](const Graph& g, const std::vector<Vertex>& seeds, double beta) {
          return lower_bound(g, make_seeds(g, seeds), beta);
        },
        py::arg("graph"), py::arg("seeds"), py::arg("beta"),
        "BFS lower bound: sum over reachable v of beta^dist(v, seeds).");
  m.def("upper_bound_degree",
        [](const Graph& g, std::size_t k, double beta) -> py::object {
          auto ub = upper_bound_degree(g, k, beta);
          return ub ? py::object(py::float_(*ub)) : py::none();
        },
        py::arg("graph"), py::arg("k"), py::arg("beta"),
        "k/(1 - beta*Delta), or None when beta*Delta >= 1.");

  m.def("cf_rary_tree_mu", &cf_rary_tree_mu, py::arg("r"), py::arg("m"),
        py::arg("beta"));
  m.def("cf_rooted_reg_tree_limit", &cf_rooted_reg_tree_limit, py::arg("r"),
        py::arg("beta"));
  m.def("cf_reg_tree_root", &cf_reg_tree_root, py::arg("r"), py::arg("beta"));
  m.def("cf_cycle_lb", &cf_cycle_lb, py::arg("n"), py::arg("beta"));
  m.def("cf_cube_lb", &cf_cube_lb, py::arg("d"), py::arg("beta"));
  m.def("cf_gw_mean", &cf_gw_mean, py::arg("c"), py::arg("beta"));
  m.def("cf_kn_lower", &cf_kn_lower, py::arg("n"), py::arg("beta"));
  m.def("gap_bound_thm3", &gap_bound_thm3, py::arg("beta"), py::arg("delta"),
        py::arg("d"), py::arg("p_fail"));

  m.def("exact_mean_bruteforce",
        [](const Graph& g, const std::vector<Vertex>& seeds, double beta) {
          return exact_mean_bruteforce(g, make_seeds(g, seeds), beta);
        },
        py::arg("graph"), py::arg("seeds"), py::arg("beta"));
  m.def("exact_mean_bruteforce_grid",
        [](const Graph& g, const std::vector<Vertex>& seeds,
           const std::vector<double>& betas) {
          return exact_mean_bruteforce_grid(g, make_seeds(g, seeds), betas);
        },
        py::arg("graph"), py::arg("seeds"), py::arg("betas"));
  m.def("exact_mean_tree",
        [](const Graph& g, const std::vector<Vertex>& seeds, double beta) {
          return exact_mean_tree(g, make_seeds(g, seeds), beta);
        },
        py::arg("graph"), py::arg("seeds"), py::arg("beta"));
  m.def("exact_distribution_bruteforce",
        [](const Graph& g, const std::vector<Vertex>& seeds, double beta) {
          return exact_distribution_bruteforce(g, make_seeds(g, seeds), beta);
        },
        py::arg("graph"), py::arg("seeds"), py::arg("beta"),
        "Full pmf of Y indexed by Y = 0..n.");

  m.def("simulate_process",
        [](const Graph& g, const std::vector<Vertex>& seeds, double beta,
           std::uint64_t seed, std::uint64_t trial, bool record_steps) {
          EpidemicParams params{beta, seed, 1};
          return outcome_dict(
              simulate_process(g, make_seeds(g, seeds), params, trial, record_steps));
        },
        py::arg("graph"), py::arg("seeds"), py::arg("beta"), py::arg("seed"),
        py::arg("trial") = 0, py::arg("record_steps") = false);
  m.def("simulate_percolation",
        [](const Graph& g, const std::vector<Vertex>& seeds, double beta,
           std::uint64_t seed, std::uint64_t trial, bool record_steps) {
          EpidemicParams params{beta, seed, 1};
          return outcome_dict(simulate_percolation(g, make_seeds(g, seeds),
                                                   params, trial, record_steps));
        },
        py::arg("graph"), py::arg("seeds"), py::arg("beta"), py::arg("seed"),
        py::arg("trial") = 0, py::arg("record_steps") = false);
  m.def("estimate_mean",
        [](const Graph& g, const std::vector<Vertex>& seeds, double beta,
           std::uint64_t trials, std::uint64_t seed, const std::string& method,
           unsigned jobs) {
          EpidemicParams params{beta, seed, trials};
          return estimate_dict(estimate_mean(g, make_seeds(g, seeds), params,
                                             parse_method(method), jobs));
        },
        py::arg("graph"), py::arg("seeds"), py::arg("beta"), py::arg("trials"),
        py::arg("seed") = 0, py::arg("method") = "percolation",
        py::arg("jobs") = 1);

  m.def("make_report",
        [](const Graph& g, const std::vector<Vertex>& seeds, double beta,
           bool with_exact, bool with_estimate, std::uint64_t seed,
           std::uint64_t trials, const std::string& method, unsigned jobs) {
          ReportOptions opt;
          opt.with_exact = with_exact;
          opt.with_estimate = with_estimate;
          opt.master_seed = seed;
          opt.trials = trials;
          opt.method = parse_method(method);
          opt.jobs = jobs;
          BoundReport r = make_report(g, make_seeds(g, seeds), beta, opt);
          py::dict d;
          d["lb"] = r.lb;
          d["ub_degree"] =
              r.ub_degree ? py::object(py::float_(*r.ub_degree)) : py::none();
          if (!r.ub_degree) d["ub_absent_reason"] = r.ub_absent_reason;
          if (r.exact) d["exact"] = *r.exact;
          if (r.estimate) d["estimate"] = estimate_dict(*r.estimate);
          d["beta"] = r.beta;
          d["k"] = r.k;
          d["n"] = r.n;
          d["max_degree"] = r.diagnostics.max_degree;
          d["seed_tree_radius"] = r.diagnostics.seed_tree_radius;
          return d;
        },
        py::arg("graph"), py::arg("seeds"), py::arg("beta"),
        py::arg("with_exact") = false, py::arg("with_estimate") = false,
        py::arg("seed") = 0, py::arg("trials") = 10'000,
        py::arg("method") = "percolation", py::arg("jobs") = 1);

  auto run_and_convert = [](std::vector<ExperimentRow> rows) {
    py::list out;
    for (const ExperimentRow& r : rows) out.append(row_dict(r));
    return out;
  };
  m.def("run_convergence",
        [run_and_convert](const std::string& family, std::vector<std::uint64_t> sizes,
                          std::vector<double> betas, std::size_t k,
                          std::uint64_t trials, std::uint64_t master_seed,
                          unsigned r, std::size_t chords,
                          std::size_t graphs_per_cell, const std::string& method,
                          unsigned jobs) {
          return run_and_convert(run_convergence(
              spec_from_kwargs(family, r, chords, std::move(sizes),
                               std::move(betas), k, trials, master_seed,
                               graphs_per_cell, method, std::nullopt, jobs)));
        },
        py::arg("family"), py::arg("sizes"), py::arg("betas"), py::arg("k") = 1,
        py::arg("trials") = 10'000, py::arg("master_seed") = 0, py::arg("r") = 3,
        py::arg("chords") = 1, py::arg("graphs_per_cell") = 5,
        py::arg("method") = "percolation", py::arg("jobs") = 1);
  m.def("run_sandwich",
        [run_and_convert](const std::string& family, std::vector<std::uint64_t> sizes,
                          std::vector<double> betas, std::size_t k,
                          std::uint64_t trials, std::uint64_t master_seed,
                          std::optional<std::int32_t> alpha, std::size_t chords,
                          std::size_t graphs_per_cell, unsigned jobs) {
          return run_and_convert(run_sandwich(
              spec_from_kwargs(family, 3, chords, std::move(sizes),
                               std::move(betas), k, trials, master_seed,
                               graphs_per_cell, "percolation", alpha, jobs)));
        },
        py::arg("family") = "cycle", py::arg("sizes") = std::vector<std::uint64_t>{},
        py::arg("betas") = std::vector<double>{}, py::arg("k") = 1,
        py::arg("trials") = 10'000, py::arg("master_seed") = 0,
        py::arg("alpha") = std::nullopt, py::arg("chords") = 1,
        py::arg("graphs_per_cell") = 5, py::arg("jobs") = 1);
  m.def("run_kn_gap",
        [run_and_convert](std::vector<std::uint64_t> sizes, double beta,
                          std::uint64_t trials, std::uint64_t master_seed,
                          std::size_t graphs_per_cell, unsigned jobs) {
          return run_and_convert(run_kn_gap(spec_from_kwargs(
              "complete", 3, 0, std::move(sizes), {beta}, 1, trials, master_seed,
              graphs_per_cell, "percolation", std::nullopt, jobs)));
        },
        py::arg("sizes"), py::arg("beta"), py::arg("trials") = 10'000,
        py::arg("master_seed") = 0, py::arg("graphs_per_cell") = 1,
        py::arg("jobs") = 1);
}
