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
#include "trifourier/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace trifourier {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer matrix overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer matrix overflow");
  return out;
}

std::int64_t abs64(std::int64_t v) {
  if (v == INT64_MIN) throw OverflowError("integer matrix overflow");
  return v < 0 ? -v : v;
}

// Working copy of [a | rhs] with per-row nonzero counts over the left block.
class Augmented {
 public:
  Augmented(const IntegerMatrix& a, const IntegerMatrix& rhs)
      : n_(a.rows()), width_(a.cols() + rhs.cols()), data_(n_ * width_), nnz_(n_, 0) {
    for (std::size_t r = 0; r < n_; ++r) {
      std::copy(a.row(r), a.row(r) + a.cols(), row(r));
      std::copy(rhs.row(r), rhs.row(r) + rhs.cols(), row(r) + a.cols());
      for (std::size_t c = 0; c < n_; ++c) nnz_[r] += row(r)[c] != 0;
    }
  }

  std::int64_t* row(std::size_t r) { return data_.data() + r * width_; }
  std::size_t nnz(std::size_t r) const { return nnz_[r]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a), row(a) + width_, row(b));
    std::swap(nnz_[a], nnz_[b]);
  }

  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < width_; ++c) row(r)[c] = -row(r)[c];
  }

  // target -= factor * source, starting at column `from`.
  void subtract(std::size_t target, std::size_t source, std::int64_t factor, std::size_t from) {
    std::int64_t* t = row(target);
    const std::int64_t* s = row(source);
    std::size_t count = 0;
    for (std::size_t c = 0; c < from; ++c) count += t[c] != 0;
    for (std::size_t c = from; c < width_; ++c) {
      if (s[c] != 0) {
        t[c] = checked_add(t[c], -checked_mul(factor, s[c]));
        peak_ = std::max(peak_, abs64(t[c]));
      }
      if (c < n_) count += t[c] != 0;
    }
    nnz_[target] = count;
  }

  std::int64_t peak() const { return peak_; }

 private:
  std::size_t n_;
  std::size_t width_;
  std::vector<std::int64_t> data_;
  std::vector<std::size_t> nnz_;
  std::int64_t peak_ = 0;
};

}  // namespace

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

std::size_t IntegerMatrix::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](std::int64_t v) { return v != 0; }));
}

std::int64_t IntegerMatrix::max_abs() const {
  std::int64_t out = 0;
  for (std::int64_t v : data_) out = std::max(out, abs64(v));
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::int64_t* o = out.row(r);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t v = a(r, k);
      if (v == 0) continue;
      const std::int64_t* br = b.row(k);
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (br[c] != 0) o[c] = checked_add(o[c], checked_mul(v, br[c]));
      }
    }
  }
  return out;
}

IntegerElimination eliminate(const IntegerMatrix& a, const IntegerMatrix& rhs) {
  if (a.rows() != a.cols() || rhs.rows() != a.rows()) {
    throw std::invalid_argument("elimination needs a square matrix and matching right-hand side");
  }
  const std::size_t n = a.rows();
  Augmented m(a, rhs);
  IntegerElimination result;
  mpz_class det = 1;

  for (std::size_t col = 0; col < n; ++col) {
    // Prefer a unit pivot in the sparsest row.
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      const std::int64_t v = m.row(r)[col];
      if ((v == 1 || v == -1) && (pivot == n || m.nnz(r) < m.nnz(pivot))) pivot = r;
    }
    if (pivot == n) {
      // Euclidean reduction among rows >= col until one nonzero remains.
      for (;;) {
        std::size_t smallest = n;
        std::size_t nonzero = 0;
        for (std::size_t r = col; r < n; ++r) {
          const std::int64_t v = m.row(r)[col];
          if (v == 0) continue;
          ++nonzero;
          if (smallest == n || abs64(v) < abs64(m.row(smallest)[col])) smallest = r;
        }
        if (smallest == n) {
          result.determinant = 0;
          result.peak = m.peak();
          return result;
        }
        if (nonzero == 1) {
          pivot = smallest;
          break;
        }
        const std::int64_t p = m.row(smallest)[col];
        for (std::size_t r = col; r < n; ++r) {
          if (r == smallest || m.row(r)[col] == 0) continue;
          m.subtract(r, smallest, m.row(r)[col] / p, col);
        }
      }
    }
    if (pivot != col) {
      m.swap_rows(pivot, col);
      det = -det;
    }
    if (m.row(col)[col] < 0) {
      m.negate_row(col);
      det = -det;
    }
    const std::int64_t p = m.row(col)[col];
    det *= static_cast<long>(p);
    // Clear the column. Rows above are only reduced when the pivot is a unit,
    // which is the only case where a solution is produced.
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const std::int64_t v = m.row(r)[col];
      if (v == 0) continue;
      if (r < col && p != 1) continue;
      if (v % p != 0) continue;  // handled below for r > col
      m.subtract(r, col, v / p, col);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      // Non-divisible entries under a non-unit pivot: Euclid already left
      // only one nonzero in this column, so nothing remains here.
      if (m.row(r)[col] != 0) throw std::logic_error("elimination left a nonzero below the pivot");
    }
  }
  result.determinant = det;
  result.peak = m.peak();
  if (det == 1 || det == -1) {
    // Left block may still hold entries above non-unit pivots only if some
    // pivot was not 1; with |det| = 1 every pivot is 1, so it is the identity.
    IntegerMatrix solution(n, rhs.cols());
    for (std::size_t r = 0; r < n; ++r) {
      std::copy(m.row(r) + n, m.row(r) + n + rhs.cols(), solution.row(r));
    }
    result.solution = std::move(solution);
  }
  return result;
}

}  // namespace trifourier
