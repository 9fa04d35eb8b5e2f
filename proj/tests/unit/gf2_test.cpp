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
#include "trifourier/gf2.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "printers.hpp"

namespace trifourier {
namespace {

TEST(SymplecticSpace, GramForSmallDimensions) {
  const auto v2 = SymplecticSpace::make(2);
  EXPECT_FALSE(v2.gram(1, 1));
  EXPECT_TRUE(v2.gram(1, 2));
  EXPECT_TRUE(v2.gram(2, 1));
  EXPECT_FALSE(v2.gram(2, 2));

  const auto v4 = SymplecticSpace::make(4);
  EXPECT_EQ(v4.pairing(v4.circular(1), v4.circular(4)), 0);
  EXPECT_EQ(v4.pairing(v4.circular(2), v4.circular(5)), 0);
  EXPECT_EQ(v4.pairing(v4.circular(4), v4.circular(5)), 1);
  EXPECT_EQ(v4.pairing(v4.circular(5), v4.circular(1)), 1);
}

TEST(SymplecticSpace, ZeroDimensionIsEmpty) {
  const auto v0 = SymplecticSpace::make(0);
  EXPECT_EQ(v0.cardinality(), 1U);
  EXPECT_EQ(v0.circular_bits(1), 0U);
}

TEST(SymplecticSpace, RejectsBadDimensions) {
  EXPECT_THROW(SymplecticSpace::make(3), DimensionError);
  EXPECT_THROW(SymplecticSpace::make(-2), DimensionError);
  EXPECT_THROW(SymplecticSpace::make(kMaxDimension + 2), DimensionError);
}

TEST(SymplecticSpace, PairingAgreesWithAdjacencyRule) {
  for (int d : {2, 4, 6}) {
    const auto v = SymplecticSpace::make(d);
    for (Word x = 0; x < v.cardinality(); ++x) {
      EXPECT_EQ(v.pairing_bits(x, x), 0);
      for (Word y = 0; y < v.cardinality(); ++y) {
        ASSERT_EQ(v.pairing_bits(x, y), oracle::pairing(d, x, y)) << "D=" << d << " x=" << x << " y=" << y;
      }
    }
  }
}

TEST(SymplecticSpace, FormIsNondegenerate) {
  for (int d = 0; d <= kMaxDimension; d += 2) {
    EXPECT_EQ(SymplecticSpace::make(d).gram_determinant(), 1) << "D=" << d;
  }
}

TEST(SymplecticSpace, CircularBasisSumsToZero) {
  for (int d = 2; d <= 10; d += 2) {
    const auto v = SymplecticSpace::make(d);
    Word sum = 0;
    for (int i = 1; i <= d + 1; ++i) sum ^= v.circular_bits(i);
    EXPECT_EQ(sum, 0U);
  }
}

TEST(SymplecticSpace, IntervalVectors) {
  const auto v2 = SymplecticSpace::make(2);
  EXPECT_EQ(v2.interval_bits(1, 2), v2.circular_bits(3));
  const auto v4 = SymplecticSpace::make(4);
  EXPECT_EQ(v4.interval_bits(1, 4), v4.circular_bits(5));
  EXPECT_EQ(v4.interval_bits(3, 3), v4.circular_bits(3));
  EXPECT_EQ(v4.interval_vector(2, 3), v4.circular(2) + v4.circular(3));
}

TEST(Subspace, CanonicalFormIgnoresGenerators) {
  EXPECT_EQ(Subspace::span(4, {0b0001, 0b0001}).dimension(), 1);
  EXPECT_EQ(Subspace::span(4, {0b0011, 0b0010}), Subspace::span(4, {0b0001, 0b0010}));
  EXPECT_EQ(Subspace::span(4, std::initializer_list<Word>{}).dimension(), 0);
  EXPECT_EQ(Subspace::span(6, {0b000111, 0b011000, 0b011111}), Subspace::span(6, {0b011000, 0b000111}));
}

TEST(Subspace, ElementsMatchClosure) {
  const auto s = Subspace::span(6, {0b000101, 0b110000, 0b011010});
  const std::vector<Word> listed = s.elements();
  const std::set<Word> got(listed.begin(), listed.end());
  EXPECT_EQ(listed.size(), 8U);
  EXPECT_EQ(got, oracle::span({0b000101, 0b110000, 0b011010}));
}

TEST(Subspace, IsotropyExamples) {
  const auto v2 = SymplecticSpace::make(2);
  EXPECT_TRUE(is_isotropic(v2, Subspace::span(2, {0b01})));
  EXPECT_FALSE(is_isotropic(v2, Subspace::span(2, {0b01, 0b10})));
}

TEST(Subspace, OrthogonalComplementMatchesBruteForce) {
  const auto v = SymplecticSpace::make(6);
  const std::vector<Word> gens{0b000001, 0b001100};
  const auto s = Subspace::span(6, gens);
  const auto complement = orthogonal_complement(v, s);
  const auto listed = complement.elements();
  EXPECT_EQ(std::set<Word>(listed.begin(), listed.end()), oracle::perp(6, oracle::span(gens)));
  EXPECT_EQ(complement.dimension(), 4);
}

TEST(IntervalLabel, NormalizedForm) {
  // [1,2] in D=4 is even, so I' is the complement {3,4,5}.
  const IntervalLabel even{4, 1, 2};
  EXPECT_EQ(even.normalized(), (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(even.compact(), "345");
  // [3,4] wraps to {5,1,2}, printed from the start of the run.
  const IntervalLabel wrap{4, 3, 4};
  EXPECT_EQ(wrap.compact(), "512");
  const IntervalLabel odd{4, 2, 4};
  EXPECT_EQ(odd.compact(), "234");
}

TEST(IntervalLabel, CompactFormStaysSeparableAboveNine) {
  const IntervalLabel label{10, 1, 10};
  EXPECT_EQ(label.compact(), "11");
  const IntervalLabel wrap{10, 3, 10};
  EXPECT_EQ(wrap.compact(), "(11,1,2)");
}

}  // namespace
}  // namespace trifourier
