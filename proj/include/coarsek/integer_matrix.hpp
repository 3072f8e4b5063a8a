#pragma once

#include <vector>

#include "coarsek/types.hpp"

namespace coarsek {

/// Dense row-major integer matrix. Only used at desk scale (a few hundred rows).
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Integer operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerMatrix operator*(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// D = left * A * right with D diagonal, d_1 | d_2 | ... and left, right unimodular.
struct SmithForm {
  IntegerMatrix diagonal;
  IntegerMatrix left;
  IntegerMatrix right;
  std::vector<Integer> divisors;  // nonzero diagonal entries, positive, in order
  std::size_t rank() const { return divisors.size(); }
};

SmithForm smith_normal_form(const IntegerMatrix& a);

/// Rank over the rationals, Bareiss fraction-free elimination.
std::size_t rational_rank(IntegerMatrix a);

}  // namespace coarsek
