#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <walkgauge/enumerate.hpp>
#include <walkgauge/forest_oracle.hpp>
#include <walkgauge/linalg.hpp>
#include <walkgauge/unicyclic.hpp>

using walkgauge::Graph;
using walkgauge::Integer;
using walkgauge::Rational;
using walkgauge::RationalMatrix;

namespace {

// Cofactor-expansion determinant: hopeless complexity, unimpeachable logic.
Rational cofactor_determinant(const RationalMatrix& a) {
  int n = a.rows();
  if (n == 1) return a(0, 0);
  Rational det(0);
  for (int j = 0; j < n; ++j) {
    RationalMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r)
      for (int c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    Rational term = a(0, j) * cofactor_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

RationalMatrix hilbert(int n) {
  RationalMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = Rational(1, i + j + 1);
  return h;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  RationalMatrix a(3, 3);
  int vals[3][3] = {{2, -1, 3}, {0, 4, 5}, {-2, 7, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = Rational(vals[i][j]);
  CHECK(walkgauge::determinant(a) == cofactor_determinant(a));

  RationalMatrix q(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) q(i, j) = Rational(3 * i - 2 * j + 1, 1 + ((i * 5 + j * 3) % 4));
  CHECK(walkgauge::determinant(q) == cofactor_determinant(q));

  for (int n = 1; n <= 5; ++n) CHECK(walkgauge::determinant(hilbert(n)) == cofactor_determinant(hilbert(n)));
}

TEST_CASE("determinant of fractional and structured matrices") {
  CHECK(walkgauge::determinant(hilbert(3)) == Rational(1, 2160));
  CHECK(walkgauge::determinant(RationalMatrix::identity(5)) == Rational(1));

  // Permutation matrix: sign tracks row swaps inside the elimination.
  RationalMatrix p(3, 3);
  p(0, 1) = Rational(1);
  p(1, 2) = Rational(1);
  p(2, 0) = Rational(1);
  CHECK(walkgauge::determinant(p) == Rational(1));
  RationalMatrix t(2, 2);
  t(0, 1) = Rational(1);
  t(1, 0) = Rational(1);
  CHECK(walkgauge::determinant(t) == Rational(-1));

  // Singular: duplicate rows.
  RationalMatrix s(3, 3);
  for (int j = 0; j < 3; ++j) {
    s(0, j) = Rational(j + 1);
    s(1, j) = Rational(j + 1);
    s(2, j) = Rational(7 * j - 2);
  }
  CHECK(walkgauge::determinant(s) == Rational(0));
}

TEST_CASE("linear solve recovers a constructed solution") {
  // Build A and x, then solve A x = b and demand x back, entry for entry.
  int n = 5;
  RationalMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Rational(1, i + j + 1);  // Hilbert: nasty but regular
  std::vector<Rational> x;
  for (int i = 0; i < n; ++i) x.push_back(Rational(2 * i - 3, i + 2));
  std::vector<Rational> b(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i] += a(i, j) * x[j];
  std::vector<Rational> got = walkgauge::solve_linear_system(a, b);
  REQUIRE(got.size() == x.size());
  for (int i = 0; i < n; ++i) CHECK(got[i] == x[i]);
}

TEST_CASE("linear solve with a matrix right-hand side") {
  RationalMatrix a(3, 3);
  int vals[3][3] = {{1, 2, 0}, {3, -1, 4}, {0, 5, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = Rational(vals[i][j]);
  RationalMatrix want(3, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) want(i, j) = Rational(i - j, 3 + j);
  RationalMatrix b(3, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) {
      b(i, j) = Rational(0);
      for (int k = 0; k < 3; ++k) b(i, j) += a(i, k) * want(k, j);
    }
  CHECK(walkgauge::solve_linear_system(a, b) == want);
}

TEST_CASE("linear solve rejects bad systems") {
  RationalMatrix s(2, 2);
  s(0, 0) = Rational(1);
  s(0, 1) = Rational(2);
  s(1, 0) = Rational(2);
  s(1, 1) = Rational(4);
  std::vector<Rational> b = {Rational(1), Rational(1)};
  CHECK_THROWS_AS(walkgauge::solve_linear_system(s, b), walkgauge::SingularMatrixError);
  std::vector<Rational> wrong = {Rational(1)};
  RationalMatrix ok = RationalMatrix::identity(2);
  CHECK_THROWS_AS(walkgauge::solve_linear_system(ok, wrong), walkgauge::DimensionMismatchError);
}

TEST_CASE("laplacian structure") {
  Graph g = walkgauge::make_S(6, 4);
  RationalMatrix lap = walkgauge::laplacian(g);
  for (int i = 0; i < g.n(); ++i) {
    Rational row(0);
    for (int j = 0; j < g.n(); ++j) {
      if (i == j)
        CHECK(lap(i, j) == Rational(g.degree(i)));
      else
        CHECK(lap(i, j) == (g.has_edge(i, j) ? Rational(-1) : Rational(0)));
      row += lap(i, j);
    }
    CHECK(row.is_zero());
  }
  RationalMatrix red = walkgauge::reduced_laplacian(g, 2);
  CHECK(red.rows() == g.n() - 1);
  // Deleting row/column 2 shifts later indices down by one.
  CHECK(red(0, 0) == lap(0, 0));
  CHECK(red(2, 2) == lap(3, 3));
  CHECK(red(0, 2) == lap(0, 3));
}

TEST_CASE("spanning tree count matches subset brute force") {
  using walkgauge::spanning_tree_count;
  using walkgauge::spanning_tree_count_bruteforce;

  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : walkgauge::enumerate_unicyclic(n))
      CHECK(spanning_tree_count(g) == spanning_tree_count_bruteforce(g));

  for (int n = 2; n <= 7; ++n) CHECK(spanning_tree_count(walkgauge::make_path(n)) == 1);
  for (int n = 3; n <= 9; ++n) CHECK(spanning_tree_count(walkgauge::make_cycle(n)) == n);

  Graph k4 = walkgauge::build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(spanning_tree_count(k4) == spanning_tree_count_bruteforce(k4));
  Graph k5e = walkgauge::build_graph(
      5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(spanning_tree_count(k5e) == spanning_tree_count_bruteforce(k5e));
}
