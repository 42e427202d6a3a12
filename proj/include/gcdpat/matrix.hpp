#pragma once

#include <cstddef>
#include <vector>

#include "gcdpat/integer.hpp"

namespace gcdpat {

// Row-major dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& v);

// Determinant by Bareiss fraction-free elimination with row pivoting.
Integer bareiss_determinant(IntMatrix m);

struct ScaledSolution {
  Integer det;                  // det(M), sign included
  std::vector<Integer> scaled;  // det(M) * M^{-1} * rhs, i.e. adj(M) * rhs
};

// Solves M x = rhs fraction-free and returns det(M)*x. Requires det(M) != 0;
// returns det = 0 and an empty vector otherwise.
ScaledSolution bareiss_solve_scaled(IntMatrix m, const std::vector<Integer>& rhs);

// Row-style Hermite normal form: upper triangular, positive pivots, entries
// above each pivot reduced into [0, pivot). Built from unimodular row
// operations (extended gcd combinations), no division by pivots.
IntMatrix hermite_normal_form(IntMatrix m);

}  // namespace gcdpat
