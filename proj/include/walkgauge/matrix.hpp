#ifndef WALKGAUGE_MATRIX_HPP
#define WALKGAUGE_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "walkgauge/errors.hpp"
#include "walkgauge/rational.hpp"

namespace walkgauge {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatchError("negative matrix dimension");
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  Rational& at(int i, int j) {
    check_index(i, j);
    return (*this)(i, j);
  }
  const Rational& at(int i, int j) const {
    check_index(i, j);
    return (*this)(i, j);
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  void check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw DimensionMismatchError("matrix index out of range");
  }

  int rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace walkgauge

#endif
