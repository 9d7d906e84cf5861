#include "epibound/exact.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "epibound/errors.hpp"

namespace epibound {

namespace {

// Streaming pairwise summation: partial sums form a binary counter, so
// every value joins the total through O(log N) balanced additions.
class PairwiseSum {
 public:
  void add(double x) {
    std::size_t i = 0;
    while (count_ & (std::uint64_t{1} << i)) {
      x += partials_[i];
      ++i;
    }
    partials_[i] = x;
    ++count_;
  }

  double total() const {
    double t = 0.0;
    for (std::size_t i = 0; i < 64; ++i) {
      if (count_ & (std::uint64_t{1} << i)) t += partials_[i];
    }
    return t;
  }

 private:
  double partials_[64] = {};
  std::uint64_t count_ = 0;
};

// The enumeration only needs the vertices that can ever join a seed
// cluster: edge endpoints and the seeds themselves.
struct CompactInstance {
  std::vector<Vertex> verts;            // ascending original ids
  std::vector<std::pair<int, int>> edges;  // compact endpoints, edge-id order
  std::vector<int> seeds;               // compact ids

  explicit CompactInstance(const Graph& g, const SeedSet& seed_set) {
    verts.reserve(2 * g.edge_count() + seed_set.size());
    for (const Edge& e : g.edges()) {
      verts.push_back(e.u);
      verts.push_back(e.v);
    }
    verts.insert(verts.end(), seed_set.ids().begin(), seed_set.ids().end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto compact = [&](Vertex v) {
      return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                              verts.begin());
    };
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.emplace_back(compact(e.u), compact(e.v));
    for (Vertex s : seed_set.ids()) seeds.push_back(compact(s));
  }
};

// Union-find sized for the compact instance, rebuilt per subset.
class SubsetClusters {
 public:
  explicit SubsetClusters(std::size_t n) : parent_(n), size_(n) {}

  // Y for one open-edge subset: total size of the distinct clusters
  // containing seeds (isolated seeds count as singletons).
  std::uint32_t seed_union_size(const CompactInstance& inst,
                                std::uint32_t subset) {
    const std::size_t n = parent_.size();
    for (std::size_t i = 0; i < n; ++i) {
      parent_[i] = static_cast<int>(i);
      size_[i] = 1;
    }
    std::uint32_t bits = subset;
    while (bits) {
      int e = std::countr_zero(bits);
      bits &= bits - 1;
      int a = find(inst.edges[static_cast<std::size_t>(e)].first);
      int b = find(inst.edges[static_cast<std::size_t>(e)].second);
      if (a != b) {
        parent_[a] = b;
        size_[b] += size_[a];
      }
    }
    std::uint32_t y = 0;
    for (int s : inst.seeds) {
      int root = find(s);
      if (size_[root] > 0) {
        y += static_cast<std::uint32_t>(size_[root]);
        size_[root] = 0;  // count each seed cluster once
      }
    }
    return y;
  }

 private:
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  std::vector<int> parent_;
  std::vector<int> size_;
};

void check_edge_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.edge_count() > cap) {
    throw cap_exceeded(std::string(what) + " is capped at " +
                       std::to_string(cap) + " edges; graph has " +
                       std::to_string(g.edge_count()));
  }
}

std::vector<double> power_table(double base, std::size_t max_exp) {
  std::vector<double> p(max_exp + 1);
  p[0] = 1.0;
  for (std::size_t j = 1; j <= max_exp; ++j) p[j] = p[j - 1] * base;
  return p;
}

}  // namespace

double exact_mean_bruteforce(const Graph& g, const SeedSet& seeds, double beta) {
  check_edge_cap(g, kBruteForceEdgeCap, "exact_mean_bruteforce");
  if (!(beta > 0.0 && beta < 1.0)) throw domain_error("beta must be in (0,1)");

  const CompactInstance inst(g, seeds);
  const std::size_t m = inst.edges.size();
  const auto pow_open = power_table(beta, m);
  const auto pow_closed = power_table(1.0 - beta, m);

  SubsetClusters clusters(inst.verts.size());
  PairwiseSum sum;
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t subset = 0; subset < subsets; ++subset) {
    auto open = static_cast<std::size_t>(std::popcount(subset));
    std::uint32_t y =
        clusters.seed_union_size(inst, static_cast<std::uint32_t>(subset));
    sum.add(pow_open[open] * pow_closed[m - open] * static_cast<double>(y));
  }
  return sum.total();
}

std::vector<double> exact_mean_bruteforce_grid(const Graph& g,
                                               const SeedSet& seeds,
                                               std::span<const double> betas) {
  check_edge_cap(g, kBruteForceEdgeCap, "exact_mean_bruteforce");
  for (double b : betas) {
    if (!(b > 0.0 && b < 1.0)) throw domain_error("beta must be in (0,1)");
  }

  const CompactInstance inst(g, seeds);
  const std::size_t m = inst.edges.size();

  // total_by_open[j] = sum of Y over all subsets with exactly j open edges.
  std::vector<std::uint64_t> total_by_open(m + 1, 0);
  SubsetClusters clusters(inst.verts.size());
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t subset = 0; subset < subsets; ++subset) {
    auto open = static_cast<std::size_t>(std::popcount(subset));
    total_by_open[open] +=
        clusters.seed_union_size(inst, static_cast<std::uint32_t>(subset));
  }

  std::vector<double> means;
  means.reserve(betas.size());
  for (double beta : betas) {
    const auto pow_open = power_table(beta, m);
    const auto pow_closed = power_table(1.0 - beta, m);
    PairwiseSum sum;
    for (std::size_t j = 0; j <= m; ++j) {
      sum.add(pow_open[j] * pow_closed[m - j] *
              static_cast<double>(total_by_open[j]));
    }
    means.push_back(sum.total());
  }
  return means;
}

double exact_mean_tree(const Graph& g, const SeedSet& seeds, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw domain_error("beta must be in (0,1)");

  // Component id per vertex, plus per-component vertex and edge counts.
  const Vertex n = g.vertex_count();
  std::vector<std::int32_t> comp(n, -1);
  std::vector<std::uint64_t> comp_vertices;
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    auto id = static_cast<std::int32_t>(comp_vertices.size());
    comp_vertices.push_back(0);
    comp[v] = id;
    stack.assign(1, v);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++comp_vertices[static_cast<std::size_t>(id)];
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<std::uint64_t> comp_edges(comp_vertices.size(), 0);
  for (const Edge& e : g.edges()) ++comp_edges[static_cast<std::size_t>(comp[e.u])];

  std::vector<std::int32_t> seed_of_comp(comp_vertices.size(), -1);
  for (Vertex s : seeds.ids()) {
    auto c = static_cast<std::size_t>(comp[s]);
    if (seed_of_comp[c] >= 0) {
      throw domain_error("exact_mean_tree: seeds " +
                         std::to_string(seed_of_comp[c]) + " and " +
                         std::to_string(s) +
                         " share a component; the distance-sum identity "
                         "does not apply (use brute force)");
    }
    seed_of_comp[c] = static_cast<std::int32_t>(s);
    if (comp_edges[c] != comp_vertices[c] - 1) {
      throw domain_error("exact_mean_tree: the component of seed " +
                         std::to_string(s) + " is not a tree");
    }
  }

  DistanceMap dist = bfs_distances(g, seeds);
  std::vector<std::uint64_t> count_at(
      static_cast<std::size_t>(dist.max_finite()) + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
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

std::vector<double> exact_distribution_bruteforce(const Graph& g,
                                                  const SeedSet& seeds,
                                                  double beta) {
  check_edge_cap(g, kDistributionEdgeCap, "exact_distribution_bruteforce");
  if (!(beta > 0.0 && beta < 1.0)) throw domain_error("beta must be in (0,1)");

  const CompactInstance inst(g, seeds);
  const std::size_t m = inst.edges.size();
  const auto pow_open = power_table(beta, m);
  const auto pow_closed = power_table(1.0 - beta, m);

  std::vector<double> pmf(g.vertex_count() + 1, 0.0);
  SubsetClusters clusters(inst.verts.size());
  const std::uint64_t subsets = std::uint64_t{1} << m;
  for (std::uint64_t subset = 0; subset < subsets; ++subset) {
    auto open = static_cast<std::size_t>(std::popcount(subset));
    std::uint32_t y =
        clusters.seed_union_size(inst, static_cast<std::uint32_t>(subset));
    pmf[y] += pow_open[open] * pow_closed[m - open];
  }
  return pmf;
}

}  // namespace epibound
