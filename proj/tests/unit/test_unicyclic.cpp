#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include <walkgauge/enumerate.hpp>
#include <walkgauge/graph_io.hpp>
#include <walkgauge/metrics.hpp>
#include <walkgauge/unicyclic.hpp>

#include "support/oracles.hpp"

using walkgauge::Graph;
using walkgauge::UnicyclicDecomposition;
using walkgauge::unicyclic_decompose;
namespace wt = walkgauge::test;

TEST_CASE("decomposition rejects non-unicyclic input") {
  CHECK_THROWS_AS(unicyclic_decompose(walkgauge::make_path(5)), walkgauge::NotUnicyclicError);
  Graph two_cycles =
      walkgauge::build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {2, 3}}, false);
  CHECK_THROWS_AS(unicyclic_decompose(two_cycles), walkgauge::NotUnicyclicError);
  Graph disconnected = walkgauge::build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}, false);
  CHECK_THROWS_AS(unicyclic_decompose(disconnected), walkgauge::NotUnicyclicError);
}

TEST_CASE("decomposition agrees with leaf-stripping oracle") {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : walkgauge::enumerate_unicyclic(n)) {
      UnicyclicDecomposition d = unicyclic_decompose(g);
      std::vector<int> cyc = d.cycle();
      std::sort(cyc.begin(), cyc.end());
      CHECK(cyc == wt::cycle_vertices_stripped(g));
      CHECK(d.cycle_length() == static_cast<int>(cyc.size()));
      CHECK(d.n() == n);

      // The cycle sequence really is a cycle in g.
      const std::vector<int>& c = d.cycle();
      for (size_t i = 0; i < c.size(); ++i)
        CHECK(g.has_edge(c[i], c[(i + 1) % c.size()]));
    }
  }
}

TEST_CASE("branch data is consistent with plain BFS") {
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : walkgauge::enumerate_unicyclic(n)) {
      UnicyclicDecomposition d = unicyclic_decompose(g);
      int l = d.cycle_length();

      int size_sum = 0;
      long trans_sum = 0;
      for (int i = 0; i < l; ++i) {
        size_sum += d.branch_size(i);
        trans_sum += d.branch_transmission(i);
        CHECK(d.branch_root(i) == d.cycle()[i]);

        // Recompute the branch transmission from scratch.
        long want = 0;
        for (int x : d.branch_vertices(i)) {
          CHECK(d.branch_of(x) == i);
          want += wt::oracle_bfs(g, x)[d.branch_root(i)];
        }
        CHECK(d.branch_transmission(i) == want);
        CHECK(static_cast<int>(d.branch_vertices(i).size()) == d.branch_size(i));
      }
      CHECK(size_sum == n);
      CHECK(d.total_branch_transmission() == trans_sum);

      for (int x = 0; x < n; ++x) {
        CHECK(d.on_cycle(x) == (d.root_distance(x) == 0));
        CHECK(d.branch_root_of(x) == d.branch_root(d.branch_of(x)));
        // Root distance: BFS distance to the branch root, which is also the
        // nearest cycle vertex.
        std::vector<int> dist = wt::oracle_bfs(g, x);
        CHECK(d.root_distance(x) == dist[d.branch_root_of(x)]);
        int nearest = g.n();
        for (int v : d.cycle()) nearest = std::min(nearest, dist[v]);
        CHECK(d.root_distance(x) == nearest);
      }
    }
  }
}

TEST_CASE("cycle orientation does not depend on labeling") {
  // Relabeling may flip direction or start, but cycle membership, branch
  // sizes, and root distances are invariants.
  Graph g = walkgauge::make_P(8, 4);
  UnicyclicDecomposition d = unicyclic_decompose(g);
  std::vector<int> perm = {7, 2, 5, 0, 1, 3, 4, 6};
  Graph h = walkgauge::relabel(g, perm);
  UnicyclicDecomposition e = unicyclic_decompose(h);
  CHECK(e.cycle_length() == d.cycle_length());
  CHECK(e.total_branch_transmission() == d.total_branch_transmission());
  for (int x = 0; x < g.n(); ++x) {
    CHECK(e.on_cycle(perm[x]) == d.on_cycle(x));
    CHECK(e.root_distance(perm[x]) == d.root_distance(x));
  }
  std::multiset<int> sizes_d, sizes_e;
  for (int i = 0; i < d.cycle_length(); ++i) {
    sizes_d.insert(d.branch_size(i));
    sizes_e.insert(e.branch_size(i));
  }
  CHECK(sizes_d == sizes_e);
}

TEST_CASE("family constructors have the advertised shape") {
  SECTION("S: all pendants on one cycle vertex") {
    Graph s = walkgauge::make_S(7, 4);
    CHECK(walkgauge::is_unicyclic(s));
    UnicyclicDecomposition d = unicyclic_decompose(s);
    CHECK(d.cycle_length() == 4);
    CHECK(s.degree(0) == 2 + 3);  // two cycle neighbors plus three pendants
    int pendants = 0;
    for (int x = 0; x < 7; ++x)
      if (s.degree(x) == 1) {
        ++pendants;
        CHECK(s.has_edge(0, x));
      }
    CHECK(pendants == 3);
  }
  SECTION("P: a path grafted onto one cycle vertex") {
    Graph p = walkgauge::make_P(7, 4);
    CHECK(walkgauge::is_unicyclic(p));
    UnicyclicDecomposition d = unicyclic_decompose(p);
    CHECK(d.cycle_length() == 4);
    // Exactly one vertex of degree 1 at distance n - l from the cycle.
    int tail = -1;
    for (int x = 0; x < 7; ++x)
      if (p.degree(x) == 1) {
        CHECK(tail == -1);
        tail = x;
      }
    REQUIRE(tail >= 0);
    CHECK(d.root_distance(tail) == 3);
  }
  SECTION("degenerate l = n is the cycle") {
    CHECK(walkgauge::make_S(6, 6).edges() == walkgauge::make_cycle(6).edges());
    CHECK(wt::isomorphic_bruteforce(walkgauge::make_P(6, 6), walkgauge::make_cycle(6)));
    UnicyclicDecomposition d = unicyclic_decompose(walkgauge::make_cycle(6));
    CHECK(d.cycle_length() == 6);
    CHECK(d.total_branch_transmission() == 0);
  }
  SECTION("constructor guards") {
    CHECK_THROWS_AS(walkgauge::make_S(5, 2), walkgauge::GraphError);
    CHECK_THROWS_AS(walkgauge::make_S(4, 5), walkgauge::GraphError);
    CHECK_THROWS_AS(walkgauge::make_P(5, 2), walkgauge::GraphError);
    CHECK_THROWS_AS(walkgauge::make_cycle(2), walkgauge::GraphError);
    CHECK_THROWS_AS(walkgauge::make_path(0), walkgauge::GraphError);
    CHECK_NOTHROW(walkgauge::make_path(1));
  }
}

TEST_CASE("every unicyclic graph at n=6 decomposes cleanly") {
  // Cross-check one full layer: partition into branches, every vertex in
  // exactly one branch, every branch rooted on the cycle.
  for (const Graph& g : walkgauge::enumerate_unicyclic(6)) {
    UnicyclicDecomposition d = unicyclic_decompose(g);
    std::set<int> all;
    for (int i = 0; i < d.cycle_length(); ++i)
      for (int x : d.branch_vertices(i)) {
        CHECK(all.insert(x).second);
        CHECK(d.on_cycle(d.branch_root(i)));
      }
    CHECK(static_cast<int>(all.size()) == 6);
  }
}
