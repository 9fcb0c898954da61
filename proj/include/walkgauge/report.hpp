#ifndef WALKGAUGE_REPORT_HPP
#define WALKGAUGE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "walkgauge/canonical.hpp"
#include "walkgauge/errors.hpp"
#include "walkgauge/forest_oracle.hpp"
#include "walkgauge/graph.hpp"
#include "walkgauge/linalg.hpp"
#include "walkgauge/metrics.hpp"
#include "walkgauge/rational.hpp"
#include "walkgauge/resistance.hpp"
#include "walkgauge/unicyclic.hpp"
#include "walkgauge/version.hpp"
#include "walkgauge/walk.hpp"

namespace walkgauge {

struct VertexInvariants {
  int vertex = 0;
  int degree = 0;
  Integer transmission;
  Integer weighted_transmission;
  int eccentricity = 0;
  Rational resistance_centrality;
  Rational weighted_resistance_centrality;
  Rational cover_cost;
  Rational reverse_cover_cost;
};

struct InvariantReport {
  int n = 0;
  int m = 0;
  std::vector<Edge> edges;
  std::string certificate;  // empty when n exceeds the certificate limit
  std::string structure;    // "tree", "unicyclic", or "general"
  int cycle_length = 0;     // 0 unless unicyclic
  std::vector<VertexInvariants> vertices;
  Integer wiener;
  Integer spanning_trees;
  Rational kirchhoff;
  Rational additive_degree_kirchhoff;
  Rational multiplicative_degree_kirchhoff;
  std::string computation_path;  // "unicyclic-closed-form" or "laplacian"
  bool verified = false;         // redundant routes were run and agreed
};

namespace detail {

inline void cross_check(const std::string& what, const Rational& a, const Rational& b) {
  if (a != b)
    throw VerificationError("cross-check failed for " + what + ": " + a.str() +
                            " vs " + b.str());
}

}  // namespace detail

// Computes the full per-vertex and scalar invariant set. Unicyclic graphs
// take the closed-form route (no linear solves); everything else goes
// through the Laplacian. With verify = true every redundant route available
// for the graph is also run and compared exactly; any disagreement throws
// VerificationError.
inline InvariantReport compute_invariants(const Graph& g, bool verify = false) {
  InvariantReport rep;
  rep.n = g.n();
  rep.m = g.m();
  rep.edges = g.edges();
  if (g.n() <= kCertificateLimit) rep.certificate = canonical_certificate(g);
  const bool tree = is_tree(g);
  const bool unicyclic = is_unicyclic(g);
  rep.structure = tree ? "tree" : unicyclic ? "unicyclic" : "general";

  std::optional<UnicyclicDecomposition> dec;
  if (unicyclic) {
    dec = unicyclic_decompose(g);
    rep.cycle_length = dec->cycle_length();
  }

  ResistanceMatrix r = unicyclic ? resistance_matrix_closed_form(*dec)
                                 : resistance_matrix_via_laplacian(g);
  rep.computation_path = unicyclic ? "unicyclic-closed-form" : "laplacian";

  std::optional<RationalMatrix> h;
  if (!unicyclic || verify) h = hitting_time_matrix(g);

  rep.wiener = wiener_index(g);
  rep.spanning_trees = spanning_tree_count(g);
  rep.kirchhoff = kirchhoff_index(r);
  rep.additive_degree_kirchhoff = additive_degree_kirchhoff(g, r);
  rep.multiplicative_degree_kirchhoff = multiplicative_degree_kirchhoff(g, r);

  rep.vertices.resize(g.n());
  for (int x = 0; x < g.n(); ++x) {
    VertexInvariants& row = rep.vertices[x];
    row.vertex = x;
    row.degree = g.degree(x);
    row.transmission = transmission(g, x);
    row.weighted_transmission = weighted_transmission(g, x);
    row.eccentricity = eccentricity(g, x);
    row.resistance_centrality = resistance_centrality(r, x);
    row.weighted_resistance_centrality = weighted_resistance_centrality(g, r, x);
    if (unicyclic) {
      row.cover_cost = cover_cost_closed(*dec, x, r);
      row.reverse_cover_cost = reverse_cover_cost_closed(*dec, x, r);
    } else {
      row.cover_cost = cover_cost(*h, x);
      row.reverse_cover_cost = reverse_cover_cost(*h, x);
    }
  }

  if (verify) {
    // Resistance routes: closed form vs Laplacian for unicyclic graphs,
    // shortest-path distances for trees, and the spanning-forest oracle
    // whenever the edge count keeps subset enumeration cheap.
    ResistanceMatrix r_lap = unicyclic ? resistance_matrix_via_laplacian(g) : r;
    if (unicyclic) {
      for (int x = 0; x < g.n(); ++x)
        for (int y = 0; y < g.n(); ++y)
          detail::cross_check("effective resistance", r(x, y), r_lap(x, y));
    }
    if (tree) {
      auto dist = shortest_distance_matrix(g);
      for (int x = 0; x < g.n(); ++x)
        for (int y = 0; y < g.n(); ++y)
          detail::cross_check("tree resistance vs distance", r(x, y),
                              Rational(static_cast<long>(dist[x][y])));
    }
    if (g.m() <= 16) {
      for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y)
          detail::cross_check("spanning-forest resistance", r(x, y),
                              spanning_forest_resistance(g, x, y));
    }

    // Walk sums vs closed forms (unicyclic) / transmission identities (trees).
    for (int x = 0; x < g.n(); ++x) {
      detail::cross_check("cover cost", rep.vertices[x].cover_cost, cover_cost(*h, x));
      detail::cross_check("reverse cover cost", rep.vertices[x].reverse_cover_cost,
                          reverse_cover_cost(*h, x));
      if (tree) {
        Rational two_w = Rational(2) * Rational(rep.wiener);
        detail::cross_check("tree CC + D = 2W",
                            rep.vertices[x].cover_cost + Rational(rep.vertices[x].transmission),
                            two_w);
      }
    }

    // Hitting-time routes: linear systems vs the electrical formulas.
    for (int x = 0; x < g.n(); ++x)
      for (int y = 0; y < g.n(); ++y) {
        detail::cross_check("general hitting formula", (*h)(x, y),
                            hitting_time_formula_general(g, x, y, r_lap));
        if (unicyclic)
          detail::cross_check("unicyclic hitting formula", (*h)(x, y),
                              hitting_time_formula_unicyclic(*dec, x, y, r));
      }
    rep.verified = true;
  }
  return rep;
}

}  // namespace walkgauge

#endif
