#ifndef WALKGAUGE_LINALG_HPP
#define WALKGAUGE_LINALG_HPP

#include <vector>

#include "walkgauge/errors.hpp"
#include "walkgauge/graph.hpp"
#include "walkgauge/matrix.hpp"
#include "walkgauge/rational.hpp"

namespace walkgauge {

namespace detail {

// Integer matrix in row-major order, rows x cols, first `square` columns are
// the coefficient block, the rest are right-hand sides carried along.
struct IntegerTableau {
  int rows = 0, cols = 0;
  std::vector<Integer> a;
  Integer& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Integer& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Fraction-free Bareiss elimination on the full augmented tableau. Every
// intermediate entry is a minor of the (row-permuted) input, so the divisions
// below are exact and coefficient growth stays polynomial in magnitude.
// Returns the determinant sign flip from row swaps; pivots end up on the
// diagonal of the leading square block. Throws on a structurally singular
// leading block.
inline int bareiss_eliminate(IntegerTableau& m, int square) {
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < square; ++k) {
    int pivot = -1;
    for (int i = k; i < m.rows; ++i)
      if (m(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw SingularMatrixError("singular matrix in exact elimination");
    if (pivot != k) {
      for (int j = 0; j < m.cols; ++j) swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < m.rows; ++i) {
      for (int j = k + 1; j < m.cols; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign;
}

// Clear denominators row by row (a positive row scale changes neither the
// solution set nor, tracked separately, the determinant).
inline IntegerTableau scale_to_integers(const RationalMatrix& a, const RationalMatrix& rhs,
                                        std::vector<Integer>* row_scales = nullptr) {
  IntegerTableau m;
  m.rows = a.rows();
  m.cols = a.cols() + rhs.cols();
  m.a.assign(static_cast<size_t>(m.rows) * m.cols, Integer(0));
  for (int i = 0; i < m.rows; ++i) {
    Integer scale = 1;
    for (int j = 0; j < a.cols(); ++j) scale = lcm(scale, a(i, j).denominator());
    for (int j = 0; j < rhs.cols(); ++j) scale = lcm(scale, rhs(i, j).denominator());
    for (int j = 0; j < a.cols(); ++j) {
      const Rational& q = a(i, j);
      m(i, j) = q.numerator() * (scale / q.denominator());
    }
    for (int j = 0; j < rhs.cols(); ++j) {
      const Rational& q = rhs(i, j);
      m(i, a.cols() + j) = q.numerator() * (scale / q.denominator());
    }
    if (row_scales) row_scales->push_back(scale);
  }
  return m;
}

}  // namespace detail

// Exact solve of A * X = B via fraction-free elimination and rational back
// substitution. The result is re-multiplied through A and compared against B,
// so a returned X is unconditionally trustworthy.
inline RationalMatrix solve_linear_system(const RationalMatrix& a, const RationalMatrix& b) {
  const int n = a.rows();
  if (a.cols() != n) throw DimensionMismatchError("coefficient matrix must be square");
  if (b.rows() != n) throw DimensionMismatchError("right-hand side row count != matrix size");

  detail::IntegerTableau m = detail::scale_to_integers(a, b);
  detail::bareiss_eliminate(m, n);

  RationalMatrix x(n, b.cols());
  for (int t = 0; t < b.cols(); ++t) {
    const int bcol = n + t;
    for (int i = n - 1; i >= 0; --i) {
      Rational s(m(i, bcol));
      for (int j = i + 1; j < n; ++j) s -= Rational(m(i, j)) * x(j, t);
      x(i, t) = s / Rational(m(i, i));
    }
  }

  for (int i = 0; i < n; ++i)
    for (int t = 0; t < b.cols(); ++t) {
      Rational s(0);
      for (int j = 0; j < n; ++j) s += a(i, j) * x(j, t);
      if (s != b(i, t)) throw VerificationError("linear solve residual check failed");
    }
  return x;
}

inline std::vector<Rational> solve_linear_system(const RationalMatrix& a,
                                                 const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw DimensionMismatchError("right-hand side size != matrix size");
  RationalMatrix rhs(a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i) rhs(i, 0) = b[i];
  RationalMatrix x = solve_linear_system(a, rhs);
  std::vector<Rational> out(a.rows());
  for (int i = 0; i < a.rows(); ++i) out[i] = x(i, 0);
  return out;
}

inline Rational determinant(const RationalMatrix& a) {
  const int n = a.rows();
  if (a.cols() != n) throw DimensionMismatchError("determinant needs a square matrix");
  if (n == 0) return Rational(1);

  std::vector<Integer> scales;
  detail::IntegerTableau m = detail::scale_to_integers(a, RationalMatrix(n, 0), &scales);
  int sign;
  try {
    sign = detail::bareiss_eliminate(m, n);
  } catch (const SingularMatrixError&) {
    return Rational(0);
  }
  Integer det = m(n - 1, n - 1);
  Integer denom = 1;
  for (const Integer& s : scales) denom *= s;
  return Rational(sign * det, denom);
}

// Combinatorial Laplacian L = D - A.
inline RationalMatrix laplacian(const Graph& g) {
  RationalMatrix l(g.n(), g.n());
  for (int x = 0; x < g.n(); ++x) l(x, x) = Rational(g.degree(x));
  for (const Edge& e : g.edges()) {
    l(e.u, e.v) = Rational(-1);
    l(e.v, e.u) = Rational(-1);
  }
  return l;
}

// Laplacian with the row and column of `ground` deleted; invertible exactly
// when the graph is connected.
inline RationalMatrix reduced_laplacian(const Graph& g, int ground) {
  g.check_vertex(ground);
  RationalMatrix full = laplacian(g);
  RationalMatrix r(g.n() - 1, g.n() - 1);
  for (int i = 0, ri = 0; i < g.n(); ++i) {
    if (i == ground) continue;
    for (int j = 0, rj = 0; j < g.n(); ++j) {
      if (j == ground) continue;
      r(ri, rj) = full(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

// Matrix-tree theorem: the number of spanning trees is the determinant of any
// principal (n-1)x(n-1) minor of the Laplacian.
inline Integer spanning_tree_count(const Graph& g) {
  if (g.n() == 1) return 1;
  Rational det = determinant(reduced_laplacian(g, 0));
  return det.numerator();
}

}  // namespace walkgauge

#endif
