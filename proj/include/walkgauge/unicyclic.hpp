#ifndef WALKGAUGE_UNICYCLIC_HPP
#define WALKGAUGE_UNICYCLIC_HPP

#include <algorithm>
#include <queue>
#include <vector>

#include "walkgauge/errors.hpp"
#include "walkgauge/graph.hpp"
#include "walkgauge/rational.hpp"

namespace walkgauge {

// Structure view of a connected graph with exactly one cycle: the cycle
// v_0 v_1 ... v_{l-1} plus, hanging off each cycle vertex v_i, the tree branch
// T_i that contains it (possibly just {v_i} itself). Branch indices follow
// cycle positions. The cycle ordering is normalized so it starts at the
// smallest cycle vertex label and proceeds toward that vertex's
// smaller-labeled cycle neighbor; invariants never depend on this choice, and
// the tests confirm that by relabeling.
class UnicyclicDecomposition {
public:
  const Graph& graph() const { return graph_; }
  int n() const { return graph_.n(); }
  int cycle_length() const { return static_cast<int>(cycle_.size()); }
  const std::vector<int>& cycle() const { return cycle_; }

  bool on_cycle(int x) const { return root_distance_[x] == 0; }
  // Index i such that x lies in branch T_i.
  int branch_of(int x) const { return branch_of_[x]; }
  // Cycle vertex v_i = root of branch i.
  int branch_root(int i) const { return cycle_[i]; }
  // Root of the branch containing x.
  int branch_root_of(int x) const { return cycle_[branch_of_[x]]; }
  // d(x, v_i) within x's branch tree (0 for cycle vertices).
  int root_distance(int x) const { return root_distance_[x]; }
  // |T_i|, counting the root.
  int branch_size(int i) const { return branch_size_[i]; }
  // D_{T_i}(v_i): sum of in-branch distances from the root.
  long branch_transmission(int i) const { return branch_transmission_[i]; }
  // Sum of D_{T_i}(v_i) over all branches.
  long total_branch_transmission() const { return total_branch_transmission_; }

  const std::vector<int>& branch_vertices(int i) const { return branch_members_[i]; }

  friend UnicyclicDecomposition unicyclic_decompose(const Graph& g);

private:
  explicit UnicyclicDecomposition(Graph g) : graph_(std::move(g)) {}

  Graph graph_;
  std::vector<int> cycle_;
  std::vector<int> branch_of_;
  std::vector<int> root_distance_;
  std::vector<int> branch_size_;
  std::vector<long> branch_transmission_;
  std::vector<std::vector<int>> branch_members_;
  long total_branch_transmission_ = 0;
};

inline UnicyclicDecomposition unicyclic_decompose(const Graph& g) {
  if (!g.connected() || g.m() != g.n())
    throw NotUnicyclicError("decomposition needs a connected graph with m == n");
  const int n = g.n();

  // The cycle is the 2-core: peel degree-1 vertices until none remain.
  std::vector<int> deg(n);
  for (int x = 0; x < n; ++x) deg[x] = g.degree(x);
  std::queue<int> leaves;
  for (int x = 0; x < n; ++x)
    if (deg[x] == 1) leaves.push(x);
  std::vector<char> removed(n, 0);
  while (!leaves.empty()) {
    int x = leaves.front();
    leaves.pop();
    removed[x] = 1;
    for (int y : g.neighbors(x))
      if (!removed[y] && --deg[y] == 1) leaves.push(y);
  }

  std::vector<char> on_cycle(n, 0);
  int start = -1, cycle_len = 0;
  for (int x = 0; x < n; ++x)
    if (!removed[x]) {
      on_cycle[x] = 1;
      ++cycle_len;
      if (start < 0) start = x;
    }
  if (cycle_len < 3) throw NotUnicyclicError("cycle extraction failed");

  UnicyclicDecomposition d(g);
  d.cycle_.reserve(cycle_len);
  d.cycle_.push_back(start);
  // Walk the cycle. From the start vertex both cycle neighbors qualify and
  // the minimum fixes the orientation; afterwards exactly one neighbor is not
  // the previous vertex.
  int prev = -1, cur = start;
  while (static_cast<int>(d.cycle_.size()) < cycle_len) {
    int next = -1;
    for (int y : g.neighbors(cur))
      if (on_cycle[y] && y != prev && (next < 0 || y < next)) next = y;
    prev = cur;
    cur = next;
    d.cycle_.push_back(cur);
  }

  d.branch_of_.assign(n, -1);
  d.root_distance_.assign(n, -1);
  d.branch_size_.assign(cycle_len, 0);
  d.branch_transmission_.assign(cycle_len, 0);
  d.branch_members_.assign(cycle_len, {});
  std::queue<int> bfs;
  for (int i = 0; i < cycle_len; ++i) {
    int v = d.cycle_[i];
    d.branch_of_[v] = i;
    d.root_distance_[v] = 0;
    bfs.push(v);
  }
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    int i = d.branch_of_[x];
    d.branch_size_[i] += 1;
    d.branch_transmission_[i] += d.root_distance_[x];
    d.branch_members_[i].push_back(x);
    for (int y : g.neighbors(x)) {
      if (d.branch_of_[y] >= 0 || on_cycle[y]) continue;
      d.branch_of_[y] = i;
      d.root_distance_[y] = d.root_distance_[x] + 1;
      bfs.push(y);
    }
  }
  for (int i = 0; i < cycle_len; ++i) d.total_branch_transmission_ += d.branch_transmission_[i];
  return d;
}

// S_n^l: cycle C_l with n-l pendant vertices all attached to one cycle vertex
// (vertex 0). S_n^n is the plain cycle.
inline Graph make_S(int n, int l) {
  if (l < 3 || l > n) throw GraphError("S family needs 3 <= l <= n");
  std::vector<Edge> edges;
  for (int i = 0; i < l; ++i) edges.push_back({i, (i + 1) % l});
  for (int x = l; x < n; ++x) edges.push_back({0, x});
  return build_graph(n, std::move(edges));
}

// P_n^l: cycle C_l with a path on n-l extra vertices grafted onto vertex 0.
// P_n^n is the plain cycle.
inline Graph make_P(int n, int l) {
  if (l < 3 || l > n) throw GraphError("P family needs 3 <= l <= n");
  std::vector<Edge> edges;
  for (int i = 0; i < l; ++i) edges.push_back({i, (i + 1) % l});
  for (int x = l; x < n; ++x) edges.push_back({x == l ? 0 : x - 1, x});
  return build_graph(n, std::move(edges));
}

inline Graph make_cycle(int n) { return make_S(n, n); }

inline Graph make_path(int n) {
  if (n < 1) throw GraphError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return build_graph(n, std::move(edges));
}

inline Graph make_star(int n) {
  if (n < 1) throw GraphError("star needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return build_graph(n, std::move(edges));
}

}  // namespace walkgauge

#endif
