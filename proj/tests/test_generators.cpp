#include <doctest.h>

#include <algorithm>
#include <vector>

#include "epibound/errors.hpp"
#include "epibound/generators.hpp"
#include "epibound/graph.hpp"
#include "support.hpp"

using namespace epibound;
using namespace epibound::testing;

TEST_CASE("cycle generator") {
  Graph c3 = gen_cycle(3);
  CHECK(c3.edge_count() == 3);
  Graph c5 = gen_cycle(5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK_THROWS_AS(gen_cycle(2), domain_error);
}

TEST_CASE("path generator") {
  CHECK(gen_path(1).edge_count() == 0);
  CHECK(gen_path(2).edge_count() == 1);
  CHECK(gen_path(4).edge_count() == 3);
}

TEST_CASE("complete generator") {
  CHECK(gen_complete(1).edge_count() == 0);
  CHECK(gen_complete(2).edge_count() == 1);
  CHECK(gen_complete(4).edge_count() == 6);
}

TEST_CASE("hypercube generator") {
  CHECK(gen_hypercube(1).edge_count() == 1);

  Graph q2 = gen_hypercube(2);  // a 4-cycle
  CHECK(q2.vertex_count() == 4);
  CHECK(q2.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(q2.degree(v) == 2);

  Graph q3 = gen_hypercube(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);

  for (unsigned d = 1; d <= 6; ++d) {
    Graph q = gen_hypercube(d);
    check_graph_invariants(q);
    CHECK(q.edge_count() == static_cast<std::size_t>(d) << (d - 1));
    for (Vertex v = 0; v < q.vertex_count(); ++v) CHECK(q.degree(v) == d);
  }
  CHECK_THROWS_AS(gen_hypercube(0), domain_error);
  CHECK_THROWS_AS(gen_hypercube(21), domain_error);
}

TEST_CASE("rooted regular tree generator") {
  RootedTree t21 = gen_rary_tree(2, 1);  // root plus one child
  CHECK(t21.graph.vertex_count() == 2);
  CHECK(t21.graph.edge_count() == 1);

  RootedTree t32 = gen_rary_tree(3, 2);  // 1 + 2 + 4
  CHECK(t32.graph.vertex_count() == 7);
  CHECK(is_tree(t32.graph));
  CHECK(t32.graph.degree(t32.root) == 2);  // root degree r-1
  // Internal non-root vertices have total degree r.
  CHECK(t32.graph.degree(1) == 3);
  CHECK(t32.graph.degree(2) == 3);

  RootedTree t0 = gen_rary_tree(4, 0);
  CHECK(t0.graph.vertex_count() == 1);

  CHECK_THROWS_AS(gen_rary_tree(1, 3), domain_error);
}

TEST_CASE("generalized cycle generator") {
  RngStream rng(11, 0);
  CHECK(gen_generalized_cycle(9, 0, rng).edge_count() == 9);

  Graph gc = gen_generalized_cycle(10, 1, rng);
  check_graph_invariants(gc);
  CHECK(gc.edge_count() == 11);
  int deg3 = 0;
  for (Vertex v = 0; v < 10; ++v) {
    CHECK(gc.degree(v) >= 2);
    CHECK(gc.degree(v) <= 3);
    if (gc.degree(v) == 3) ++deg3;
  }
  CHECK(deg3 == 2);

  // n=4 with both chords forced: the only valid matching is the two
  // diagonals, so the result is always K_4.
  for (int i = 0; i < 10; ++i) {
    Graph k4 = gen_generalized_cycle(4, 2, rng);
    CHECK(k4.edge_count() == 6);
    for (Vertex v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
  }

  CHECK_THROWS_AS(gen_generalized_cycle(5, 3, rng), domain_error);
  CHECK_THROWS_AS(gen_generalized_cycle(2, 0, rng), domain_error);
}

TEST_CASE("generalized cycle degree multiset") {
  RngStream rng(12, 0);
  for (int trial = 0; trial < 20; ++trial) {
    auto n = static_cast<Vertex>(8 + rng.uniform_below(30));
    std::size_t chords = 1 + rng.uniform_below(n / 4);
    Graph gc = gen_generalized_cycle(n, chords, rng);
    check_graph_invariants(gc);
    CHECK(gc.edge_count() == n + chords);
    std::size_t deg3 = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (gc.degree(v) == 3) ++deg3;
      else CHECK(gc.degree(v) == 2);
    }
    CHECK(deg3 == 2 * chords);
  }
}

TEST_CASE("random regular generator basics") {
  RngStream rng(21, 0);
  // The unique 3-regular graph on 4 vertices is K_4.
  for (int i = 0; i < 5; ++i) {
    Graph g = gen_random_regular(4, 3, rng);
    CHECK(g.edge_count() == 6);
  }
  Graph c = gen_random_regular(6, 2, rng);
  check_graph_invariants(c);
  for (Vertex v = 0; v < 6; ++v) CHECK(c.degree(v) == 2);

  CHECK_THROWS_AS(gen_random_regular(5, 3, rng), domain_error);  // 15 odd
  CHECK_THROWS_AS(gen_random_regular(4, 4, rng), domain_error);  // r >= n
}

TEST_CASE("random regular outputs are always simple and regular") {
  RngStream rng(22, 0);
  const std::pair<Vertex, unsigned> cases[] = {{8, 3}, {10, 4}, {12, 3}, {7, 2}};
  for (auto [n, r] : cases) {
    for (int i = 0; i < 25; ++i) {
      Graph g = gen_random_regular(n, r, rng);
      check_graph_invariants(g);
      for (Vertex v = 0; v < n; ++v) CHECK(g.degree(v) == r);
    }
  }
}

TEST_CASE("random regular approximate repair mode") {
  RngStream rng(23, 0);
  for (int i = 0; i < 10; ++i) {
    Graph g = gen_random_regular(20, 6, rng, RegularSampling::approximate_repair);
    check_graph_invariants(g);
    for (Vertex v = 0; v < 20; ++v) CHECK(g.degree(v) == 6);
  }
}

TEST_CASE("random regular (6,2) class frequencies match 60:10") {
  // Labeled 2-regular graphs on 6 vertices: 60 single hexagons and 10
  // pairs of triangles, 70 total. Chi-square with 1 dof at significance
  // 0.001 (critical value 10.828).
  RngStream rng(24, 0);
  const int samples = 10'000;
  int hexagons = 0;
  for (int i = 0; i < samples; ++i) {
    Graph g = gen_random_regular(6, 2, rng);
    DistanceMap d = bfs_distances(g, SeedSet({0}, 6));
    bool connected = true;
    for (Vertex v = 0; v < 6; ++v) connected = connected && d.reachable(v);
    if (connected) ++hexagons;
  }
  const double expected_hex = samples * 60.0 / 70.0;
  const double expected_tri = samples * 10.0 / 70.0;
  const double observed_tri = samples - hexagons;
  double chi2 = (hexagons - expected_hex) * (hexagons - expected_hex) / expected_hex +
                (observed_tri - expected_tri) * (observed_tri - expected_tri) / expected_tri;
  CHECK(chi2 < 10.828);
}

TEST_CASE("Galton-Watson tree generator") {
  RngStream rng(41, 0);

  GwConfig extinct{{1.0}, 60, 1000};  // P(0 children) = 1
  GwTree t0 = gen_gw_tree(extinct, rng);
  CHECK(t0.graph.vertex_count() == 1);
  CHECK_FALSE(t0.truncated);

  GwConfig line{{0.0, 1.0}, 5, 1000};  // P(1 child) = 1, depth cap 5
  GwTree t1 = gen_gw_tree(line, rng);
  CHECK(t1.graph.vertex_count() == 6);
  CHECK(t1.truncated);
  CHECK(is_tree(t1.graph));

  GwConfig capped{{0.0, 0.0, 1.0}, 60, 10};  // binary, size cap 10
  GwTree t2 = gen_gw_tree(capped, rng);
  CHECK(t2.graph.vertex_count() == 10);
  CHECK(t2.truncated);
  CHECK(is_tree(t2.graph));

  // Critical process (c = 1): truncation frequency is measured, not pinned.
  GwConfig critical{{0.5, 0.0, 0.5}, 60, 10'000};
  CHECK(critical.mean() == doctest::Approx(1.0));
  int truncated = 0;
  for (int i = 0; i < 100; ++i) {
    GwTree t = gen_gw_tree(critical, rng);
    check_graph_invariants(t.graph);
    CHECK(is_tree(t.graph));
    truncated += t.truncated ? 1 : 0;
  }
  CHECK(truncated >= 0);  // recorded; no asserted rate

  GwConfig bad{{0.5, 0.4}, 60, 1000};
  CHECK_THROWS_AS(gen_gw_tree(bad, rng), domain_error);
}

TEST_CASE("every generator output passes graph validation") {
  RngStream rng(55, 0);
  check_graph_invariants(gen_cycle(9));
  check_graph_invariants(gen_path(6));
  check_graph_invariants(gen_complete(7));
  check_graph_invariants(gen_hypercube(4));
  check_graph_invariants(gen_rary_tree(3, 3).graph);
  check_graph_invariants(gen_generalized_cycle(20, 3, rng));
  check_graph_invariants(gen_random_regular(10, 3, rng));
  GwConfig cfg{{0.2, 0.5, 0.3}, 20, 500};
  check_graph_invariants(gen_gw_tree(cfg, rng).graph);
}
