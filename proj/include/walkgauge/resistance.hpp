#ifndef WALKGAUGE_RESISTANCE_HPP
#define WALKGAUGE_RESISTANCE_HPP

#include <vector>

#include "walkgauge/errors.hpp"
#include "walkgauge/graph.hpp"
#include "walkgauge/linalg.hpp"
#include "walkgauge/matrix.hpp"
#include "walkgauge/metrics.hpp"
#include "walkgauge/rational.hpp"
#include "walkgauge/unicyclic.hpp"

namespace walkgauge {

// Symmetric matrix of pairwise effective resistances (zero diagonal).
using ResistanceMatrix = RationalMatrix;

// Electrical route: ground a vertex, invert the reduced Laplacian M = L_0^-1,
// then r(x,y) = M[x][x] + M[y][y] - 2 M[x][y] (rows/cols indexed with the
// ground removed; terms involving the ground vanish). The grounding choice is
// mathematically irrelevant and the tests pin that down.
inline ResistanceMatrix resistance_matrix_via_laplacian(const Graph& g, int ground = 0) {
  if (!g.connected()) throw DisconnectedError("resistance needs a connected graph");
  g.check_vertex(ground);
  const int n = g.n();
  ResistanceMatrix r(n, n);
  if (n == 1) return r;

  RationalMatrix minv =
      solve_linear_system(reduced_laplacian(g, ground), RationalMatrix::identity(n - 1));
  auto idx = [ground](int v) { return v < ground ? v : v - 1; };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Rational val;
      if (x == ground) {
        val = minv(idx(y), idx(y));
      } else if (y == ground) {
        val = minv(idx(x), idx(x));
      } else {
        val = minv(idx(x), idx(x)) + minv(idx(y), idx(y)) - Rational(2) * minv(idx(x), idx(y));
      }
      r(x, y) = val;
      r(y, x) = val;
    }
  return r;
}

// Closed-form route for a unicyclic graph: vertices in the same branch are
// joined by a unique path (tree resistance = distance); vertices in different
// branches pay their tree legs plus the cycle's parallel-arc resistance
// k(l-k)/l between the two roots.
inline Rational resistance_unicyclic(const UnicyclicDecomposition& d, int x, int y) {
  const Graph& g = d.graph();
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) return Rational(0);
  int bx = d.branch_of(x), by = d.branch_of(y);
  if (bx == by) return Rational(bfs_distances(g, x)[y]);
  int l = d.cycle_length();
  int k = bx < by ? by - bx : bx - by;
  return Rational(d.root_distance(x)) + Rational(static_cast<long>(k) * (l - k), l) +
         Rational(d.root_distance(y));
}

inline ResistanceMatrix resistance_matrix_closed_form(const UnicyclicDecomposition& d) {
  const Graph& g = d.graph();
  const int n = g.n();
  const int l = d.cycle_length();
  auto dist = shortest_distance_matrix(g);
  ResistanceMatrix r(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Rational val;
      int bx = d.branch_of(x), by = d.branch_of(y);
      if (bx == by) {
        val = Rational(dist[x][y]);
      } else {
        int k = bx < by ? by - bx : bx - by;
        val = Rational(d.root_distance(x)) + Rational(static_cast<long>(k) * (l - k), l) +
              Rational(d.root_distance(y));
      }
      r(x, y) = val;
      r(y, x) = val;
    }
  return r;
}

// Default route: closed form when the one-cycle structure applies, otherwise
// the Laplacian. Redundant-path verification diffs the two on unicyclic input.
inline ResistanceMatrix resistance_matrix(const Graph& g) {
  if (is_unicyclic(g)) return resistance_matrix_closed_form(unicyclic_decompose(g));
  return resistance_matrix_via_laplacian(g);
}

// R(x) = sum_y r(x,y).
inline Rational resistance_centrality(const ResistanceMatrix& r, int x) {
  Rational total;
  for (int y = 0; y < r.rows(); ++y) total += r(x, y);
  return total;
}

// R^w(x) = sum_y deg(y) r(x,y).
inline Rational weighted_resistance_centrality(const Graph& g, const ResistanceMatrix& r, int x) {
  Rational total;
  for (int y = 0; y < r.rows(); ++y) total += Rational(g.degree(y)) * r(x, y);
  return total;
}

// Kf(G) = sum over unordered pairs of r(x,y).
inline Rational kirchhoff_index(const ResistanceMatrix& r) {
  Rational total;
  for (int x = 0; x < r.rows(); ++x)
    for (int y = x + 1; y < r.rows(); ++y) total += r(x, y);
  return total;
}

// Kf^+(G) = sum over unordered pairs of (deg x + deg y) r(x,y).
inline Rational additive_degree_kirchhoff(const Graph& g, const ResistanceMatrix& r) {
  Rational total;
  for (int x = 0; x < r.rows(); ++x)
    for (int y = x + 1; y < r.rows(); ++y)
      total += Rational(g.degree(x) + g.degree(y)) * r(x, y);
  return total;
}

// Kf^*(G) = sum over unordered pairs of deg(x) deg(y) r(x,y).
inline Rational multiplicative_degree_kirchhoff(const Graph& g, const ResistanceMatrix& r) {
  Rational total;
  for (int x = 0; x < r.rows(); ++x)
    for (int y = x + 1; y < r.rows(); ++y)
      total += Rational(g.degree(x)) * Rational(g.degree(y)) * r(x, y);
  return total;
}

// Graph-level conveniences; sweeps should precompute one ResistanceMatrix and
// use the overloads above instead.
inline Rational resistance_centrality(const Graph& g, int x) {
  return resistance_centrality(resistance_matrix(g), x);
}
inline Rational weighted_resistance_centrality(const Graph& g, int x) {
  return weighted_resistance_centrality(g, resistance_matrix(g), x);
}
inline Rational kirchhoff_index(const Graph& g) {
  return kirchhoff_index(resistance_matrix(g));
}
inline Rational additive_degree_kirchhoff(const Graph& g) {
  return additive_degree_kirchhoff(g, resistance_matrix(g));
}
inline Rational multiplicative_degree_kirchhoff(const Graph& g) {
  return multiplicative_degree_kirchhoff(g, resistance_matrix(g));
}

// Kirchhoff index of a unicyclic graph assembled branch by branch: in-branch
// pairs contribute tree Wiener sums, cross-branch pairs contribute tree legs
// plus cycle resistance between the roots. A third route to Kf, independent
// of both matrices above at the formula level.
inline Rational kf_branch_decomposition(const UnicyclicDecomposition& d) {
  const Graph& g = d.graph();
  const int l = d.cycle_length();
  auto dist = shortest_distance_matrix(g);

  Rational total;
  for (int i = 0; i < l; ++i) {
    const auto& members = d.branch_vertices(i);
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b)
        total += Rational(dist[members[a]][members[b]]);
  }
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      Integer ni = d.branch_size(i), nj = d.branch_size(j);
      Integer di = d.branch_transmission(i), dj = d.branch_transmission(j);
      int k = j - i;
      total += Rational(nj * di + ni * dj);
      total += Rational(ni * nj) * Rational(static_cast<long>(k) * (l - k), l);
    }
  return total;
}

}  // namespace walkgauge

#endif
