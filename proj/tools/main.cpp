#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epibound/bounds.hpp"
#include "epibound/errors.hpp"
#include "epibound/exact.hpp"
#include "epibound/experiments.hpp"
#include "epibound/generators.hpp"
#include "epibound/graph.hpp"
#include "epibound/io.hpp"
#include "epibound/simulate.hpp"
#include "epibound/version.hpp"

namespace {

using epibound::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCap = 4;

void check_beta_open(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw epibound::domain_error(
        "beta must lie strictly inside (0,1); got " +
        epibound::format_double(beta));
  }
}

std::vector<epibound::Vertex> parse_id_list(const std::string& text) {
  std::vector<epibound::Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(static_cast<epibound::Vertex>(std::stoull(item)));
  }
  if (out.empty()) throw epibound::io_error("empty id list '" + text + "'");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw epibound::io_error("empty list '" + text + "'");
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw epibound::io_error("cannot open output file '" + path + "'");
  out << text;
}

ordered_json provenance(std::uint64_t master_seed, ordered_json params) {
  ordered_json out;
  out["tool_version"] = epibound::kVersion;
  out["master_seed"] = master_seed;
  out["params"] = std::move(params);
  return out;
}

epibound::SeedSet load_seeds(const epibound::Graph& g, const std::string& inline_list,
                             const std::string& file) {
  std::vector<epibound::Vertex> ids;
  if (!inline_list.empty()) {
    ids = parse_id_list(inline_list);
  } else if (!file.empty()) {
    ids = epibound::read_seed_file(file);
  } else {
    throw epibound::io_error("provide --seeds or --seeds-file");
  }
  return epibound::SeedSet(std::move(ids), g.vertex_count());
}

// ---------------------------------------------------------------- gen ----

struct GenOptions {
  std::uint64_t n = 0;
  unsigned d = 3;
  unsigned r = 3;
  unsigned height = 0;
  std::size_t chords = 1;
  std::string pmf_text;
  unsigned depth_cap = 60;
  std::size_t size_cap = 1'000'000;
  std::uint64_t seed = 0;
  bool approx = false;
  std::string out;
};

epibound::GwConfig parse_gw_pmf(const std::string& text, unsigned depth_cap,
                                std::size_t size_cap) {
  // "0:0.5,2:0.5" means P(0 children)=0.5, P(2 children)=0.5.
  epibound::GwConfig cfg;
  cfg.depth_cap = depth_cap;
  cfg.size_cap = size_cap;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw epibound::io_error("pmf entry '" + item + "' is not count:prob");
    }
    auto count = static_cast<std::size_t>(std::stoull(item.substr(0, colon)));
    double prob = std::stod(item.substr(colon + 1));
    if (cfg.offspring_pmf.size() <= count) cfg.offspring_pmf.resize(count + 1, 0.0);
    cfg.offspring_pmf[count] = prob;
  }
  return cfg;
}

void add_gen_command(CLI::App& app, GenOptions& opt, int& rc) {
  auto* gen = app.add_subcommand("gen", "generate a graph family as an edge list");
  gen->require_subcommand(1);

  auto emit = [&opt](const epibound::Graph& g) {
    std::ostringstream text;
    epibound::write_edge_list(text, g);
    write_text(opt.out, text.str());
  };

  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "output file (default stdout)");
  };

  auto* cycle = gen->add_subcommand("cycle", "cycle C_n");
  cycle->add_option("--n", opt.n, "vertex count")->required();
  add_common(cycle);
  cycle->callback([&, emit] { emit(epibound::gen_cycle(static_cast<epibound::Vertex>(opt.n))); });

  auto* path = gen->add_subcommand("path", "path P_n");
  path->add_option("--n", opt.n, "vertex count")->required();
  add_common(path);
  path->callback([&, emit] { emit(epibound::gen_path(static_cast<epibound::Vertex>(opt.n))); });

  auto* complete = gen->add_subcommand("complete", "complete graph K_n");
  complete->add_option("--n", opt.n, "vertex count")->required();
  add_common(complete);
  complete->callback([&, emit] { emit(epibound::gen_complete(static_cast<epibound::Vertex>(opt.n))); });

  auto* cube = gen->add_subcommand("hypercube", "d-dimensional cube Q_d");
  cube->add_option("--d", opt.d, "dimension")->required();
  add_common(cube);
  cube->callback([&, emit] { emit(epibound::gen_hypercube(opt.d)); });

  auto* tree = gen->add_subcommand("rary-tree",
                                   "rooted regular tree (root id 0, r-1 branching)");
  tree->add_option("--r", opt.r, "internal degree")->required();
  tree->add_option("--height", opt.height, "tree height")->required();
  add_common(tree);
  tree->callback([&, emit] { emit(epibound::gen_rary_tree(opt.r, opt.height).graph); });

  auto* gc = gen->add_subcommand("generalized-cycle",
                                 "cycle plus a random chord matching");
  gc->add_option("--n", opt.n, "vertex count")->required();
  gc->add_option("--chords", opt.chords, "number of chords")->required();
  gc->add_option("--seed", opt.seed, "RNG master seed");
  add_common(gc);
  gc->callback([&, emit] {
    epibound::RngStream rng(opt.seed, 0);
    emit(epibound::gen_generalized_cycle(static_cast<epibound::Vertex>(opt.n),
                                         opt.chords, rng));
  });

  auto* reg = gen->add_subcommand("random-regular", "uniform simple r-regular graph");
  reg->add_option("--n", opt.n, "vertex count")->required();
  reg->add_option("--r", opt.r, "degree")->required();
  reg->add_option("--seed", opt.seed, "RNG master seed");
  reg->add_flag("--approx", opt.approx,
                "repair collisions instead of rejecting (approximate, not uniform)");
  add_common(reg);
  reg->callback([&, emit] {
    epibound::RngStream rng(opt.seed, 0);
    auto mode = opt.approx ? epibound::RegularSampling::approximate_repair
                           : epibound::RegularSampling::exact_rejection;
    emit(epibound::gen_random_regular(static_cast<epibound::Vertex>(opt.n),
                                      opt.r, rng, mode));
  });

  auto* gw = gen->add_subcommand("gw-tree", "Galton-Watson tree (root id 0)");
  gw->add_option("--pmf", opt.pmf_text, "offspring pmf, e.g. 0:0.5,2:0.5")->required();
  gw->add_option("--depth-cap", opt.depth_cap, "truncation depth");
  gw->add_option("--size-cap", opt.size_cap, "truncation size");
  gw->add_option("--seed", opt.seed, "RNG master seed");
  add_common(gw);
  gw->callback([&, emit] {
    epibound::GwConfig cfg = parse_gw_pmf(opt.pmf_text, opt.depth_cap, opt.size_cap);
    epibound::RngStream rng(opt.seed, 0);
    epibound::GwTree t = epibound::gen_gw_tree(cfg, rng);
    emit(t.graph);
    if (t.truncated) std::cerr << "note: tree truncated at cap\n";
  });

  (void)rc;
}

// ------------------------------------------------------------- bounds ----

struct BoundsOptions {
  std::string graph;
  std::string seeds;
  std::string seeds_file;
  double beta = 0.5;
  std::string betas_text;
  bool with_exact = false;
  bool with_estimate = false;
  bool ub_only = false;
  std::uint64_t trials = 10'000;
  std::string method = "percolation";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string out;
  std::string csv;
};

ordered_json estimate_json(const epibound::Estimate& est) {
  ordered_json j;
  j["mean"] = est.mean;
  j["std_error"] = est.std_error;
  j["se_valid"] = est.se_valid;
  j["trials"] = est.trials;
  return j;
}

void run_bounds(const BoundsOptions& opt) {
  epibound::Graph g = epibound::read_edge_list_file(opt.graph);
  epibound::SeedSet seeds = load_seeds(g, opt.seeds, opt.seeds_file);

  if (!opt.betas_text.empty()) {
    // Grid mode: one CSV row per beta.
    std::vector<double> betas = parse_double_list(opt.betas_text);
    for (double b : betas) check_beta_open(b);
    std::ostringstream csv;
    csv << "beta,lb,ub_degree,exact\n";
    std::optional<std::vector<double>> exact;
    if (opt.with_exact) {
      exact = epibound::exact_mean_bruteforce_grid(g, seeds, betas);
    }
    for (std::size_t i = 0; i < betas.size(); ++i) {
      csv << epibound::format_double(betas[i]) << ','
          << epibound::format_double(epibound::lower_bound(g, seeds, betas[i]))
          << ',';
      if (auto ub = epibound::upper_bound_degree(g, seeds.size(), betas[i])) {
        csv << epibound::format_double(*ub);
      }
      csv << ',';
      if (exact) csv << epibound::format_double((*exact)[i]);
      csv << '\n';
    }
    write_text(opt.csv.empty() ? opt.out : opt.csv, csv.str());
    return;
  }

  check_beta_open(opt.beta);
  if (opt.ub_only) {
    auto ub = epibound::upper_bound_degree(g, seeds.size(), opt.beta);
    if (!ub) {
      throw epibound::domain_error(
          "degree upper bound undefined: beta*Delta >= 1");
    }
    ordered_json out = provenance(opt.seed, {{"graph", opt.graph},
                                             {"beta", opt.beta},
                                             {"k", seeds.size()}});
    out["ub_degree"] = *ub;
    write_text(opt.out, epibound::dump_json(out));
    return;
  }

  epibound::ReportOptions ropt;
  ropt.with_exact = opt.with_exact;
  ropt.with_estimate = opt.with_estimate;
  ropt.master_seed = opt.seed;
  ropt.trials = opt.trials;
  ropt.method = epibound::method_from_name(opt.method);
  ropt.jobs = opt.jobs;
  epibound::BoundReport report = epibound::make_report(g, seeds, opt.beta, ropt);

  ordered_json params;
  params["graph"] = opt.graph;
  params["seeds"] = std::vector<epibound::Vertex>(seeds.ids().begin(),
                                                  seeds.ids().end());
  params["beta"] = opt.beta;
  if (opt.with_estimate) {
    params["trials"] = opt.trials;
    params["method"] = opt.method;
    params["jobs"] = opt.jobs;
  }
  ordered_json out = provenance(opt.seed, std::move(params));
  out["lb"] = report.lb;
  if (report.ub_degree) {
    out["ub_degree"] = *report.ub_degree;
  } else {
    out["ub_degree"] = nullptr;
    out["ub_absent_reason"] = report.ub_absent_reason;
  }
  if (report.exact) out["exact"] = *report.exact;
  if (report.estimate) out["estimate"] = estimate_json(*report.estimate);
  out["beta"] = report.beta;
  out["k"] = report.k;
  out["n"] = report.n;
  out["diagnostics"] = {{"max_degree", report.diagnostics.max_degree},
                        {"seed_tree_radius", report.diagnostics.seed_tree_radius}};
  write_text(opt.out, epibound::dump_json(out));
}

// -------------------------------------------------------------- exact ----

struct ExactOptions {
  std::string graph;
  std::string seeds;
  std::string seeds_file;
  double beta = 0.5;
  bool pmf = false;
  std::string out;
};

void run_exact(const ExactOptions& opt) {
  epibound::Graph g = epibound::read_edge_list_file(opt.graph);
  epibound::SeedSet seeds = load_seeds(g, opt.seeds, opt.seeds_file);
  check_beta_open(opt.beta);

  ordered_json params;
  params["graph"] = opt.graph;
  params["seeds"] = std::vector<epibound::Vertex>(seeds.ids().begin(),
                                                  seeds.ids().end());
  params["beta"] = opt.beta;
  ordered_json out = provenance(0, std::move(params));
  if (opt.pmf) {
    out["pmf"] = epibound::exact_distribution_bruteforce(g, seeds, opt.beta);
  } else {
    out["mean"] = epibound::exact_mean_bruteforce(g, seeds, opt.beta);
  }
  write_text(opt.out, epibound::dump_json(out));
}

// ----------------------------------------------------------- simulate ----

struct SimulateOptions {
  std::string graph;
  std::string seeds;
  std::string seeds_file;
  double beta = 0.5;
  std::uint64_t trials = 10'000;
  std::string method = "percolation";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string out;
};

void run_simulate(const SimulateOptions& opt) {
  epibound::Graph g = epibound::read_edge_list_file(opt.graph);
  epibound::SeedSet seeds = load_seeds(g, opt.seeds, opt.seeds_file);
  check_beta_open(opt.beta);

  epibound::EpidemicParams params{opt.beta, opt.seed, opt.trials};
  epibound::Estimate est = epibound::estimate_mean(
      g, seeds, params, epibound::method_from_name(opt.method), opt.jobs);

  ordered_json pj;
  pj["graph"] = opt.graph;
  pj["seeds"] = std::vector<epibound::Vertex>(seeds.ids().begin(),
                                              seeds.ids().end());
  pj["beta"] = opt.beta;
  pj["trials"] = opt.trials;
  pj["method"] = opt.method;
  pj["jobs"] = opt.jobs;
  ordered_json out = provenance(opt.seed, std::move(pj));
  out["mean"] = est.mean;
  out["std_error"] = est.std_error;
  out["se_valid"] = est.se_valid;
  out["trials"] = est.trials;
  out["beta"] = est.beta;
  out["method"] = opt.method;
  out["seed"] = est.seed;
  write_text(opt.out, epibound::dump_json(out));
}

// --------------------------------------------------------- experiment ----

struct ExperimentOptions {
  std::string spec_path;
  std::string out_csv;
  std::string out_json;
  unsigned jobs = 0;  // 0 = use spec value
};

epibound::ExperimentSpec parse_spec(const ordered_json& j) {
  epibound::ExperimentSpec spec;
  if (!j.contains("family")) throw epibound::io_error("spec needs 'family'");
  spec.family = epibound::family_from_name(j.at("family").get<std::string>());
  if (j.contains("r")) spec.r = j.at("r").get<unsigned>();
  if (j.contains("chords")) spec.chords = j.at("chords").get<std::size_t>();
  if (!j.contains("sizes")) throw epibound::io_error("spec needs 'sizes'");
  spec.sizes = j.at("sizes").get<std::vector<std::uint64_t>>();
  if (!j.contains("betas")) throw epibound::io_error("spec needs 'betas'");
  spec.betas = j.at("betas").get<std::vector<double>>();
  if (j.contains("k")) spec.k = j.at("k").get<std::size_t>();
  if (j.contains("trials")) spec.trials = j.at("trials").get<std::uint64_t>();
  if (j.contains("master_seed")) {
    spec.master_seed = j.at("master_seed").get<std::uint64_t>();
  }
  if (j.contains("graphs_per_cell")) {
    spec.graphs_per_cell = j.at("graphs_per_cell").get<std::size_t>();
  }
  if (j.contains("method")) {
    spec.method = epibound::method_from_name(j.at("method").get<std::string>());
  }
  if (j.contains("alpha")) spec.alpha = j.at("alpha").get<std::int32_t>();
  if (j.contains("jobs")) spec.jobs = j.at("jobs").get<unsigned>();
  return spec;
}

void run_experiment(const ExperimentOptions& opt) {
  std::ifstream in(opt.spec_path);
  if (!in) throw epibound::io_error("cannot open spec file '" + opt.spec_path + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw epibound::io_error(std::string("spec file is not valid JSON: ") + e.what());
  }

  std::string mode = j.value("mode", std::string("convergence"));
  epibound::ExperimentSpec spec = parse_spec(j);
  if (opt.jobs > 0) spec.jobs = opt.jobs;

  std::vector<epibound::ExperimentRow> rows;
  if (mode == "convergence") {
    rows = epibound::run_convergence(spec);
  } else if (mode == "sandwich") {
    rows = epibound::run_sandwich(spec);
  } else if (mode == "kn_gap") {
    rows = epibound::run_kn_gap(spec);
  } else {
    throw epibound::io_error("unknown mode '" + mode +
                             "' (use convergence|sandwich|kn_gap)");
  }

  std::ostringstream csv;
  epibound::write_rows_csv(csv, rows);
  write_text(opt.out_csv, csv.str());

  ordered_json summary = epibound::summarize_rows(spec, mode, rows);
  ordered_json out = provenance(spec.master_seed, summary["params"]);
  out["mode"] = summary["mode"];
  out["cells"] = summary["cells"];
  write_text(opt.out_json, epibound::dump_json(out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SIR epidemic bounds and experiments on finite graphs"};
  app.set_version_flag("--version", epibound::kVersion);
  app.require_subcommand(1);

  int rc = kExitOk;
  GenOptions gen_opt;
  add_gen_command(app, gen_opt, rc);

  BoundsOptions bounds_opt;
  auto* bounds = app.add_subcommand("bounds", "BFS lower bound and degree upper bound");
  bounds->add_option("--graph", bounds_opt.graph, "edge-list file")->required();
  bounds->add_option("--seeds", bounds_opt.seeds, "comma-separated seed ids");
  bounds->add_option("--seeds-file", bounds_opt.seeds_file, "one seed id per line");
  bounds->add_option("--beta", bounds_opt.beta, "infection probability");
  bounds->add_option("--betas", bounds_opt.betas_text,
                     "comma-separated beta grid (CSV mode)");
  bounds->add_flag("--exact", bounds_opt.with_exact, "include the exact mean");
  bounds->add_flag("--estimate", bounds_opt.with_estimate,
                   "include a Monte Carlo estimate");
  bounds->add_flag("--ub-only", bounds_opt.ub_only,
                   "emit only the degree upper bound (error if undefined)");
  bounds->add_option("--trials", bounds_opt.trials, "Monte Carlo trials");
  bounds->add_option("--method", bounds_opt.method, "process|percolation");
  bounds->add_option("--seed", bounds_opt.seed, "RNG master seed");
  bounds->add_option("--jobs", bounds_opt.jobs, "worker threads");
  bounds->add_option("--out", bounds_opt.out, "output file (default stdout)");
  bounds->add_option("--csv", bounds_opt.csv, "CSV output file (grid mode)");
  bounds->callback([&] { run_bounds(bounds_opt); });

  ExactOptions exact_opt;
  auto* exact = app.add_subcommand("exact", "exact mean or pmf by enumeration");
  exact->add_option("--graph", exact_opt.graph, "edge-list file")->required();
  exact->add_option("--seeds", exact_opt.seeds, "comma-separated seed ids");
  exact->add_option("--seeds-file", exact_opt.seeds_file, "one seed id per line");
  exact->add_option("--beta", exact_opt.beta, "infection probability")->required();
  exact->add_flag("--pmf", exact_opt.pmf, "emit the full distribution of Y");
  exact->add_option("--out", exact_opt.out, "output file (default stdout)");
  exact->callback([&] { run_exact(exact_opt); });

  SimulateOptions sim_opt;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of E[Y]");
  sim->add_option("--graph", sim_opt.graph, "edge-list file")->required();
  sim->add_option("--seeds", sim_opt.seeds, "comma-separated seed ids");
  sim->add_option("--seeds-file", sim_opt.seeds_file, "one seed id per line");
  sim->add_option("--beta", sim_opt.beta, "infection probability")->required();
  sim->add_option("--trials", sim_opt.trials, "number of trials");
  sim->add_option("--method", sim_opt.method, "process|percolation");
  sim->add_option("--seed", sim_opt.seed, "RNG master seed");
  sim->add_option("--jobs", sim_opt.jobs, "worker threads");
  sim->add_option("--out", sim_opt.out, "output file (default stdout)");
  sim->callback([&] { run_simulate(sim_opt); });

  ExperimentOptions exp_opt;
  auto* exp = app.add_subcommand("experiment", "run an experiment spec file");
  exp->add_option("--spec", exp_opt.spec_path, "JSON spec file")->required();
  exp->add_option("--out-csv", exp_opt.out_csv, "CSV output file")->required();
  exp->add_option("--out-json", exp_opt.out_json,
                  "JSON summary file (default stdout)");
  exp->add_option("--jobs", exp_opt.jobs, "worker threads (overrides spec)");
  exp->callback([&] { run_experiment(exp_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const epibound::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const epibound::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const epibound::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return rc;
}
