#ifndef WALKGAUGE_FOREST_ORACLE_HPP
#define WALKGAUGE_FOREST_ORACLE_HPP

#include <numeric>
#include <vector>

#include "walkgauge/errors.hpp"
#include "walkgauge/graph.hpp"
#include "walkgauge/rational.hpp"

namespace walkgauge {

// Combinatorial cross-checks by direct edge-subset enumeration. Deliberately
// independent of the linear-algebra machinery: nothing here touches matrices,
// so agreement with the Laplacian-based routes is meaningful evidence.

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // False if x and y were already joined (adding the edge closes a cycle).
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

// Visit every k-subset of 0..m-1.
template <typename Fn>
void for_each_subset_of_size(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void check_oracle_size(const Graph& g) {
  if (g.m() > 24)
    throw SizeLimitError("edge-subset oracle limited to m <= 24, got m = " +
                         std::to_string(g.m()));
}

}  // namespace detail

// Spanning-tree count by brute force: acyclic (n-1)-edge subsets span.
inline Integer spanning_tree_count_bruteforce(const Graph& g) {
  detail::check_oracle_size(g);
  if (g.n() == 1) return 1;
  Integer count = 0;
  detail::for_each_subset_of_size(g.m(), g.n() - 1, [&](const std::vector<int>& idx) {
    detail::UnionFind uf(g.n());
    for (int i : idx) {
      const Edge& e = g.edges()[i];
      if (!uf.unite(e.u, e.v)) return;
    }
    ++count;
  });
  return count;
}

// Effective resistance as a quotient of forest counts: the number of
// 2-component spanning forests separating x from y, over the number of
// spanning trees. An acyclic subset of n-2 edges always has exactly two
// components, so only the separation test is needed.
inline Rational spanning_forest_resistance(const Graph& g, int x, int y) {
  detail::check_oracle_size(g);
  g.check_vertex(x);
  g.check_vertex(y);
  if (!g.connected()) throw DisconnectedError("resistance needs a connected graph");
  if (x == y) return Rational(0);
  Integer trees = spanning_tree_count_bruteforce(g);
  Integer separating = 0;
  detail::for_each_subset_of_size(g.m(), g.n() - 2, [&](const std::vector<int>& idx) {
    detail::UnionFind uf(g.n());
    for (int i : idx) {
      const Edge& e = g.edges()[i];
      if (!uf.unite(e.u, e.v)) return;
    }
    if (uf.find(x) != uf.find(y)) ++separating;
  });
  return Rational(separating, trees);
}

}  // namespace walkgauge

#endif
