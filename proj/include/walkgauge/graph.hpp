#ifndef WALKGAUGE_GRAPH_HPP
#define WALKGAUGE_GRAPH_HPP

#include <algorithm>
#include <queue>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "walkgauge/errors.hpp"

namespace walkgauge {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built; edges are
// stored normalized (u < v, lexicographically sorted) and adjacency lists are
// sorted. Construction validates simplicity; connectivity is checked once and
// cached, and is enforced by default because every random-walk and resistance
// quantity here needs it.
class Graph {
public:
  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool connected() const { return connected_; }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> neighbors(int x) const {
    check_vertex(x);
    return {adj_[x].data(), adj_[x].size()};
  }
  int degree(int x) const {
    check_vertex(x);
    return static_cast<int>(adj_[x].size());
  }
  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  void check_vertex(int x) const {
    if (x < 0 || x >= n_)
      throw VertexOutOfRangeError("vertex " + std::to_string(x) + " out of range [0," +
                                  std::to_string(n_) + ")");
  }

  friend Graph build_graph(int n, std::vector<Edge> edges, bool require_connected);

private:
  Graph() = default;

  int n_ = 0;
  bool connected_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Graph build_graph(int n, std::vector<Edge> edges, bool require_connected = true) {
  if (n < 1) throw GraphError("graph needs at least one vertex");
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw VertexOutOfRangeError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") out of range for n=" + std::to_string(n));
    if (e.u == e.v) throw SelfLoopError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw DuplicateEdgeError("duplicate edge (" + std::to_string(edges[i].u) + "," +
                               std::to_string(edges[i].v) + ")");

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

  std::vector<char> seen(n, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    for (int y : g.adj_[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        bfs.push(y);
      }
  }
  g.connected_ = (reached == n);
  if (require_connected && !g.connected_)
    throw DisconnectedError("graph is not connected (" + std::to_string(reached) + " of " +
                            std::to_string(n) + " vertices reachable from 0)");
  return g;
}

inline bool is_tree(const Graph& g) { return g.connected() && g.m() == g.n() - 1; }

// Connected with exactly one cycle, i.e. m == n.
inline bool is_unicyclic(const Graph& g) { return g.connected() && g.m() == g.n(); }

// Rebuild under the vertex bijection old -> new_label[old].
inline Graph relabel(const Graph& g, std::span<const int> new_label) {
  if (static_cast<int>(new_label.size()) != g.n())
    throw DimensionMismatchError("relabel map size != vertex count");
  std::vector<char> hit(g.n(), 0);
  for (int x : new_label) {
    if (x < 0 || x >= g.n() || hit[x]) throw GraphError("relabel map is not a permutation");
    hit[x] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (const Edge& e : g.edges()) edges.push_back({new_label[e.u], new_label[e.v]});
  return build_graph(g.n(), std::move(edges), false);
}

}  // namespace walkgauge

#endif
