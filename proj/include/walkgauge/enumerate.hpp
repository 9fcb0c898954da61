#ifndef WALKGAUGE_ENUMERATE_HPP
#define WALKGAUGE_ENUMERATE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "walkgauge/canonical.hpp"
#include "walkgauge/errors.hpp"
#include "walkgauge/graph.hpp"
#include "walkgauge/version.hpp"

namespace walkgauge {

// Decode a Prufer sequence (length n-2, entries in 0..n-1) into the edge set
// of the labeled tree it encodes.
inline std::vector<Edge> prufer_decode(const std::vector<int>& seq, int n) {
  if (n < 2 || static_cast<int>(seq.size()) != n - 2)
    throw DimensionMismatchError("Prufer sequence must have length n-2");
  std::vector<int> deg(n, 1);
  for (int s : seq) {
    if (s < 0 || s >= n) throw VertexOutOfRangeError("Prufer entry out of range");
    ++deg[s];
  }
  // Two-pointer leaf scan: repeatedly join the smallest current leaf to the
  // next code entry; a vertex dropping to degree 1 below the scan pointer is
  // consumed immediately, everything else is found by advancing the pointer.
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.push_back({leaf, s});
    if (--deg[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      while (deg[++ptr] != 1) {
      }
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n - 1});
  return edges;
}

// Visit every labeled tree on n vertices (n^(n-2) of them for n >= 3) as an
// edge list. Used as the exhaustive substrate for isomorphism-class streams.
inline void for_each_labeled_tree(int n, const std::function<void(const std::vector<Edge>&)>& fn) {
  if (n < 1) throw GraphError("tree stream needs n >= 1");
  if (n == 1) {
    fn({});
    return;
  }
  if (n == 2) {
    fn({{0, 1}});
    return;
  }
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    fn(prufer_decode(seq, n));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

namespace detail {

// Canonical string of a free tree: root at the centroid of the level
// structure (the center; one vertex, or two adjacent ones) and build the
// classic sorted-children parenthesis string. Equal strings <=> isomorphic
// trees, with no search involved.
inline std::string ahu_tree_key(int n, const std::vector<Edge>& edges) {
  if (n == 1) return "1:()";
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }

  // Peel leaves in rounds; the last one or two vertices are the centers.
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::vector<int> frontier, next;
  std::vector<char> gone(n, 0);
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) frontier.push_back(v);
  int left = n;
  while (left > 2) {
    next.clear();
    for (int v : frontier) {
      gone[v] = 1;
      --left;
      for (int u : adj[v])
        if (!gone[u] && --deg[u] == 1) next.push_back(u);
    }
    std::swap(frontier, next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) centers.push_back(v);

  std::function<std::string(int, int)> rooted = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int u : adj[v])
      if (u != parent) kids.push_back(rooted(u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const std::string& k : kids) s += k;
    s += ")";
    return s;
  };

  if (centers.size() == 1) return "1:" + rooted(centers[0], -1);
  std::string a = rooted(centers[0], centers[1]);
  std::string b = rooted(centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "2:" + a + "|" + b;
}

// One labeled representative per tree isomorphism class, in no particular
// order. Obtained by streaming all Prufer codes and keeping first hits.
inline std::vector<std::vector<Edge>> tree_class_representatives(int n) {
  std::vector<std::vector<Edge>> reps;
  std::set<std::string> seen;
  for_each_labeled_tree(n, [&](const std::vector<Edge>& edges) {
    std::string key = ahu_tree_key(n, edges);
    if (seen.insert(std::move(key)).second) reps.push_back(edges);
  });
  return reps;
}

}  // namespace detail

// Stream one representative per isomorphism class of trees on n vertices,
// canonically labeled, sorted by certificate.
inline void enumerate_trees(int n, const std::function<void(const Graph&)>& fn,
                            int max_n = kEnumerationLimit) {
  if (n < 1) throw GraphError("tree enumeration needs n >= 1");
  if (n > max_n)
    throw SizeLimitError("tree enumeration limited to n <= " + std::to_string(max_n) +
                         ", got n = " + std::to_string(n));
  std::map<std::string, Graph> by_cert;
  for (const auto& edges : detail::tree_class_representatives(n)) {
    Graph g = build_graph(n, edges);
    std::string cert = canonical_certificate(g);
    Graph canon = relabel(g, canonical_labeling(g));
    by_cert.emplace(std::move(cert), std::move(canon));
  }
  for (const auto& [cert, g] : by_cert) fn(g);
}

// Stream one representative per isomorphism class of unicyclic graphs
// (connected, m == n) on n vertices, canonically labeled, sorted by
// certificate. Every unicyclic class arises as some tree representative plus
// one non-tree edge, since deleting a cycle edge leaves a spanning tree.
inline void enumerate_unicyclic(int n, const std::function<void(const Graph&)>& fn,
                                int max_n = kEnumerationLimit) {
  if (n < 3) throw GraphError("unicyclic enumeration needs n >= 3");
  if (n > max_n)
    throw SizeLimitError("unicyclic enumeration limited to n <= " + std::to_string(max_n) +
                         ", got n = " + std::to_string(n));
  std::map<std::string, Graph> by_cert;
  for (const auto& tree_edges : detail::tree_class_representatives(n)) {
    Graph t = build_graph(n, tree_edges);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (t.has_edge(u, v)) continue;
        std::vector<Edge> edges = tree_edges;
        edges.push_back({u, v});
        Graph g = build_graph(n, std::move(edges));
        std::string cert = canonical_certificate(g);
        if (by_cert.count(cert)) continue;
        Graph canon = relabel(g, canonical_labeling(g));
        by_cert.emplace(std::move(cert), std::move(canon));
      }
  }
  for (const auto& [cert, g] : by_cert) fn(g);
}

inline std::vector<Graph> enumerate_trees(int n, int max_n = kEnumerationLimit) {
  std::vector<Graph> out;
  enumerate_trees(n, [&](const Graph& g) { out.push_back(g); }, max_n);
  return out;
}

inline std::vector<Graph> enumerate_unicyclic(int n, int max_n = kEnumerationLimit) {
  std::vector<Graph> out;
  enumerate_unicyclic(n, [&](const Graph& g) { out.push_back(g); }, max_n);
  return out;
}

}  // namespace walkgauge

#endif
