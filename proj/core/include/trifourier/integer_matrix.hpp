// Copyright 2026 The trifourier Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#ifndef TRIFOURIER_INTEGER_MATRIX_HPP_
#define TRIFOURIER_INTEGER_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace trifourier {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Dense row-major matrix of 64-bit integers. Arithmetic is overflow-checked.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::int64_t* row(std::size_t r) const { return data_.data() + r * cols_; }
  std::int64_t* row(std::size_t r) { return data_.data() + r * cols_; }

  IntegerMatrix transpose() const;
  std::size_t nonzeros() const;
  std::int64_t max_abs() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Result of eliminating a square integer matrix with unimodular row
/// operations (swaps, negations, adding integer multiples of rows).
struct IntegerElimination {
  mpz_class determinant;
  /// A^{-1} * rhs when |det A| = 1.
  std::optional<IntegerMatrix> solution;
  /// Largest absolute value seen during elimination.
  std::int64_t peak = 0;
};

/// Division-free Gauss-Jordan elimination of [a | rhs]. Pivots of absolute
/// value 1 are used when available; otherwise a column is reduced with
/// Euclidean row steps so the pivot becomes the gcd. Throws OverflowError if
/// an intermediate leaves the 64-bit range.
IntegerElimination eliminate(const IntegerMatrix& a, const IntegerMatrix& rhs);

inline mpz_class determinant(const IntegerMatrix& a) {
  return eliminate(a, IntegerMatrix(a.rows(), 0)).determinant;
}

}  // namespace trifourier

#endif  // TRIFOURIER_INTEGER_MATRIX_HPP_
