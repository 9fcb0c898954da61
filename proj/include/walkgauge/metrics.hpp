#ifndef WALKGAUGE_METRICS_HPP
#define WALKGAUGE_METRICS_HPP

#include <queue>
#include <vector>

#include "walkgauge/errors.hpp"
#include "walkgauge/graph.hpp"
#include "walkgauge/rational.hpp"

namespace walkgauge {

// BFS distances from src; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int src) {
  g.check_vertex(src);
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : g.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
  }
  return dist;
}

inline std::vector<std::vector<int>> shortest_distance_matrix(const Graph& g) {
  if (!g.connected()) throw DisconnectedError("distance matrix needs a connected graph");
  std::vector<std::vector<int>> d(g.n());
  for (int x = 0; x < g.n(); ++x) d[x] = bfs_distances(g, x);
  return d;
}

// Transmission D(x) = sum of distances from x to every vertex.
inline Integer transmission(const Graph& g, int x) {
  if (!g.connected()) throw DisconnectedError("transmission needs a connected graph");
  auto dist = bfs_distances(g, x);
  Integer total = 0;
  for (int d : dist) total += d;
  return total;
}

// Degree-weighted transmission D^w(x) = sum over y of deg(y) * d(x,y).
inline Integer weighted_transmission(const Graph& g, int x) {
  if (!g.connected()) throw DisconnectedError("weighted transmission needs a connected graph");
  auto dist = bfs_distances(g, x);
  Integer total = 0;
  for (int y = 0; y < g.n(); ++y) total += Integer(g.degree(y)) * dist[y];
  return total;
}

// Wiener index W(G) = sum of distances over unordered pairs.
inline Integer wiener_index(const Graph& g) {
  if (!g.connected()) throw DisconnectedError("Wiener index needs a connected graph");
  Integer total = 0;
  for (int x = 0; x < g.n(); ++x) total += transmission(g, x);
  return total / 2;
}

inline int eccentricity(const Graph& g, int x) {
  if (!g.connected()) throw DisconnectedError("eccentricity needs a connected graph");
  auto dist = bfs_distances(g, x);
  int ecc = 0;
  for (int d : dist) ecc = std::max(ecc, d);
  return ecc;
}

}  // namespace walkgauge

#endif
