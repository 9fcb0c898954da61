#ifndef WALKGAUGE_WALK_HPP
#define WALKGAUGE_WALK_HPP

#include <vector>

#include "walkgauge/errors.hpp"
#include "walkgauge/graph.hpp"
#include "walkgauge/linalg.hpp"
#include "walkgauge/matrix.hpp"
#include "walkgauge/resistance.hpp"
#include "walkgauge/unicyclic.hpp"

namespace walkgauge {

// Expected steps of the simple random walk from every start to `target`.
// First-step analysis gives, for x != target,
//   deg(x) H(x,t) - sum_{z ~ x} H(z,t) = deg(x),
// i.e. the Laplacian with target row/column removed against the degree
// vector. This is the primary route; the formula routes below must agree.
inline std::vector<Rational> hitting_times_exact(const Graph& g, int target) {
  if (!g.connected()) throw DisconnectedError("hitting times need a connected graph");
  g.check_vertex(target);
  const int n = g.n();
  std::vector<Rational> h(n);
  if (n == 1) return h;

  std::vector<Rational> rhs;
  rhs.reserve(n - 1);
  for (int x = 0; x < n; ++x)
    if (x != target) rhs.push_back(Rational(g.degree(x)));
  std::vector<Rational> sol = solve_linear_system(reduced_laplacian(g, target), rhs);
  for (int x = 0, i = 0; x < n; ++x) h[x] = (x == target) ? Rational(0) : sol[i++];
  return h;
}

// H(x,y) at entry (x,y); column y comes from one linear solve.
inline RationalMatrix hitting_time_matrix(const Graph& g) {
  const int n = g.n();
  RationalMatrix h(n, n);
  for (int y = 0; y < n; ++y) {
    std::vector<Rational> col = hitting_times_exact(g, y);
    for (int x = 0; x < n; ++x) h(x, y) = col[x];
  }
  return h;
}

// Electrical form valid on any connected graph:
//   H(x,y) = m r(x,y) + (R^w(y) - R^w(x)) / 2.
// Kept on the Laplacian resistance route so it shares nothing with the
// unicyclic closed form below beyond the graph itself.
inline Rational hitting_time_formula_general(const Graph& g, int x, int y,
                                             const ResistanceMatrix& r) {
  g.check_vertex(x);
  g.check_vertex(y);
  Rational rw_x = weighted_resistance_centrality(g, r, x);
  Rational rw_y = weighted_resistance_centrality(g, r, y);
  return Rational(g.m()) * r(x, y) + (rw_y - rw_x) / Rational(2);
}

inline Rational hitting_time_formula_general(const Graph& g, int x, int y) {
  return hitting_time_formula_general(g, x, y, resistance_matrix_via_laplacian(g));
}

// Unicyclic closed form, with v_i and v_j the branch roots of x and y:
//   H(x,y) = n r(x,y) + R(y) - R(x) + d(y,v_j) - d(x,v_i).
inline Rational hitting_time_formula_unicyclic(const UnicyclicDecomposition& d, int x, int y,
                                               const ResistanceMatrix& r) {
  d.graph().check_vertex(x);
  d.graph().check_vertex(y);
  Rational ry = resistance_centrality(r, y);
  Rational rx = resistance_centrality(r, x);
  return Rational(d.n()) * r(x, y) + ry - rx +
         Rational(d.root_distance(y) - d.root_distance(x));
}

inline Rational hitting_time_formula_unicyclic(const UnicyclicDecomposition& d, int x, int y) {
  return hitting_time_formula_unicyclic(d, x, y, resistance_matrix_closed_form(d));
}

// CC(x) = sum_y H(x,y): expected total cost of visiting every vertex from x,
// priced as if each were sought alone. RC(x) = sum_y H(y,x).
inline Rational cover_cost(const RationalMatrix& hitting, int x) {
  Rational total;
  for (int y = 0; y < hitting.cols(); ++y) total += hitting(x, y);
  return total;
}

inline Rational reverse_cover_cost(const RationalMatrix& hitting, int x) {
  Rational total;
  for (int y = 0; y < hitting.rows(); ++y) total += hitting(y, x);
  return total;
}

inline Rational cover_cost(const Graph& g, int x) { return cover_cost(hitting_time_matrix(g), x); }

inline Rational reverse_cover_cost(const Graph& g, int x) {
  return reverse_cover_cost(hitting_time_matrix(g), x);
}

// Closed forms on a unicyclic graph, for x in branch T_k:
//   CC(x) = 2 Kf(G) + sum_i D_{T_i}(v_i) - n d(x,v_k)
//   RC(x) = 2n R(x) - 2 Kf(G) - sum_i D_{T_i}(v_i) + n d(x,v_k)
// No walk is solved: everything comes from the resistance geometry.
inline Rational cover_cost_closed(const UnicyclicDecomposition& d, int x,
                                  const ResistanceMatrix& r) {
  d.graph().check_vertex(x);
  Rational kf = kirchhoff_index(r);
  return Rational(2) * kf + Rational(Integer(d.total_branch_transmission())) -
         Rational(d.n()) * Rational(d.root_distance(x));
}

inline Rational reverse_cover_cost_closed(const UnicyclicDecomposition& d, int x,
                                          const ResistanceMatrix& r) {
  d.graph().check_vertex(x);
  Rational kf = kirchhoff_index(r);
  return Rational(2) * Rational(d.n()) * resistance_centrality(r, x) - Rational(2) * kf -
         Rational(Integer(d.total_branch_transmission())) +
         Rational(d.n()) * Rational(d.root_distance(x));
}

inline Rational cover_cost_closed(const UnicyclicDecomposition& d, int x) {
  return cover_cost_closed(d, x, resistance_matrix_closed_form(d));
}

inline Rational reverse_cover_cost_closed(const UnicyclicDecomposition& d, int x) {
  return reverse_cover_cost_closed(d, x, resistance_matrix_closed_form(d));
}

}  // namespace walkgauge

#endif
