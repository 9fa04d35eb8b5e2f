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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "printers.hpp"

namespace trifourier {
namespace {

IntegerMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<mpz_class>> to_mpz(const IntegerMatrix& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = static_cast<long>(m(r, c));
  }
  return out;
}

TEST(IntegerMatrix, ProductAndTranspose) {
  const auto a = from_rows({{1, 2}, {3, 4}});
  const auto b = from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, from_rows({{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), from_rows({{1, 3}, {2, 4}}));
  EXPECT_EQ(a * IntegerMatrix::identity(2), a);
  EXPECT_EQ(a.max_abs(), 4);
}

TEST(IntegerMatrix, ProductOverflowIsDetected) {
  const std::int64_t big = std::int64_t{1} << 62;
  const auto a = from_rows({{big, big}});
  const auto b = from_rows({{2}, {2}});
  EXPECT_THROW(a * b, OverflowError);
}

TEST(IntegerMatrix, DeterminantMatchesBareiss) {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    IntegerMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
    }
    EXPECT_EQ(determinant(m), oracle::bareiss_determinant(to_mpz(m))) << "trial " << trial;
  }
}

TEST(IntegerMatrix, SolvesUnimodularSystems) {
  const auto a = from_rows({{2, 1, 0}, {1, 1, 0}, {0, 3, 1}});
  const auto rhs = from_rows({{1, 0}, {0, 1}, {5, 7}});
  const IntegerElimination result = eliminate(a, rhs);
  EXPECT_EQ(result.determinant, 1);
  ASSERT_TRUE(result.solution.has_value());
  EXPECT_EQ(a * *result.solution, rhs);
}

TEST(IntegerMatrix, NoSolutionWithoutUnitDeterminant) {
  const auto a = from_rows({{2, 0}, {0, 1}});
  const IntegerElimination result = eliminate(a, IntegerMatrix::identity(2));
  EXPECT_EQ(result.determinant, 2);
  EXPECT_FALSE(result.solution.has_value());
  EXPECT_EQ(determinant(from_rows({{1, 2}, {2, 4}})), 0);
}

}  // namespace
}  // namespace trifourier
