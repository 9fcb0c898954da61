#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <walkgauge/canonical.hpp>
#include <walkgauge/enumerate.hpp>
#include <walkgauge/graph_io.hpp>
#include <walkgauge/unicyclic.hpp>

#include "support/oracles.hpp"

using walkgauge::Graph;

namespace {

Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return walkgauge::relabel(g, perm);
}

}  // namespace

TEST_CASE("certificate is invariant under relabeling") {
  std::mt19937 rng(2024);
  std::vector<Graph> pool;
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : walkgauge::enumerate_unicyclic(n)) pool.push_back(g);
    for (const Graph& g : walkgauge::enumerate_trees(n)) pool.push_back(g);
  }
  for (const Graph& g : pool) {
    std::string cert = walkgauge::canonical_certificate(g);
    for (int round = 0; round < 10; ++round)
      CHECK(walkgauge::canonical_certificate(shuffled(g, rng)) == cert);
  }
}

TEST_CASE("certificate separates non-isomorphic graphs") {
  // Within each n, enumerated class representatives are pairwise
  // non-isomorphic, so their certificates must be pairwise distinct.
  for (int n = 4; n <= 7; ++n) {
    std::set<std::string> certs;
    int classes = 0;
    for (const Graph& g : walkgauge::enumerate_unicyclic(n)) {
      certs.insert(walkgauge::canonical_certificate(g));
      ++classes;
    }
    CHECK(static_cast<int>(certs.size()) == classes);
  }
}

TEST_CASE("certificate equality matches brute-force isomorphism") {
  // Mixed pool of shuffled trees and unicyclic graphs at n = 6: certificate
  // equality must coincide exactly with permutation-search isomorphism.
  std::mt19937 rng(99);
  std::vector<Graph> pool;
  for (const Graph& g : walkgauge::enumerate_unicyclic(6)) {
    pool.push_back(g);
    pool.push_back(shuffled(g, rng));
  }
  for (const Graph& g : walkgauge::enumerate_trees(6)) pool.push_back(shuffled(g, rng));

  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) {
      bool same_cert = walkgauge::canonical_certificate(pool[i]) ==
                       walkgauge::canonical_certificate(pool[j]);
      bool iso = walkgauge::test::isomorphic_bruteforce(pool[i], pool[j]);
      CHECK(same_cert == iso);
    }
}

TEST_CASE("canonical labeling is a permutation realizing the certificate") {
  std::mt19937 rng(5);
  for (const Graph& g : walkgauge::enumerate_unicyclic(7)) {
    Graph h = shuffled(g, rng);
    std::vector<int> lab = walkgauge::canonical_labeling(h);
    std::vector<int> sorted_lab = lab;
    std::sort(sorted_lab.begin(), sorted_lab.end());
    std::vector<int> iota(h.n());
    std::iota(iota.begin(), iota.end(), 0);
    CHECK(sorted_lab == iota);
    CHECK(walkgauge::graph6_encode(walkgauge::relabel(h, lab)) ==
          walkgauge::canonical_certificate(h));
  }
}

TEST_CASE("certificate handles highly symmetric graphs") {
  // Stars and cycles have huge automorphism groups (every leaf/vertex is a
  // twin), which stresses the twin-pruning path.
  std::mt19937 rng(31);
  for (int n = 4; n <= 9; ++n) {
    Graph star = walkgauge::make_star(n);
    Graph cycle = walkgauge::make_cycle(n);
    std::string cs = walkgauge::canonical_certificate(star);
    std::string cc = walkgauge::canonical_certificate(cycle);
    CHECK(cs != cc);
    for (int round = 0; round < 5; ++round) {
      CHECK(walkgauge::canonical_certificate(shuffled(star, rng)) == cs);
      CHECK(walkgauge::canonical_certificate(shuffled(cycle, rng)) == cc);
    }
  }
}

TEST_CASE("certificate size limit") {
  Graph big = walkgauge::make_path(13);
  CHECK_THROWS_AS(walkgauge::canonical_certificate(big), walkgauge::SizeLimitError);
  // A raised limit still works, and stays relabeling-invariant.
  std::mt19937 rng(8);
  CHECK(walkgauge::canonical_certificate(shuffled(big, rng), 13) ==
        walkgauge::canonical_certificate(big, 13));
  CHECK_NOTHROW(walkgauge::canonical_certificate(walkgauge::make_path(12)));
}
