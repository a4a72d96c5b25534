#pragma once

#include <cstddef>
#include <vector>

#include "qgauss/rational.hpp"

namespace qgauss {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Exact rank. Rows are cleared of denominators, then Bareiss fraction-free elimination.
std::size_t exact_rank(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

// True iff every leading principal minor is strictly positive.
bool leading_minors_positive(const RationalMatrix& m);

// Exact solution of a x = b for square nonsingular a; throws SingularSystem otherwise.
std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b);

// Smallest eigenvalue of a symmetric matrix, computed in double precision.
double min_eigenvalue(const RationalMatrix& m);

}  // namespace qgauss
