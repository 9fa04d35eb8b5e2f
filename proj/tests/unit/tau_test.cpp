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
#include "trifourier/tau.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "trifourier/gf2.hpp"
#include "printers.hpp"

namespace trifourier {
namespace {

Word sum(const SymplecticSpace& v, std::initializer_list<int> indices) {
  Word out = 0;
  for (int i : indices) out ^= v.circular_bits(i);
  return out;
}

TEST(Tau, ImagesOfTheCircularBasis) {
  const auto v = SymplecticSpace::make(4);
  EXPECT_EQ(tau(v, 2).circular_images(), (std::vector<Word>{sum(v, {1, 2, 3}), sum(v, {4}), sum(v, {5})}));
  EXPECT_EQ(tau(v, 1).circular_images(), (std::vector<Word>{sum(v, {3}), sum(v, {4}), sum(v, {5, 1, 2})}));
}

TEST(Tau, ZeroMapForTwoDimensions) {
  const auto v = SymplecticSpace::make(2);
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(tau(v, i).is_zero()) << i;
}

TEST(TauPrime, ImagesOfTheCircularBasis) {
  const auto v = SymplecticSpace::make(6);
  const auto vp = SymplecticSpace::make(4);
  EXPECT_EQ(tau_prime(v, 2).circular_images(), (std::vector<Word>{sum(vp, {1, 2, 3}), sum(vp, {4}), sum(vp, {5})}));
  EXPECT_EQ(tau_prime(v, 1).circular_images(), (std::vector<Word>{sum(vp, {3}), sum(vp, {4}), sum(vp, {5, 1, 2})}));
  const auto v4 = SymplecticSpace::make(4);
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(tau_prime(v4, i).is_zero());
}

TEST(Tau, InjectiveAndCompatibleWithTheForm) {
  for (int d = 4; d <= 10; d += 2) {
    const auto v = SymplecticSpace::make(d);
    const auto vp = SymplecticSpace::make(d - 2);
    for (int i = 1; i <= d + 1; ++i) {
      const LinearEmbedding t = tau(v, i);
      EXPECT_TRUE(t.images_consistent()) << d << "/" << i;
      EXPECT_TRUE(t.is_injective()) << d << "/" << i;
      // Form compatibility checked pairwise on all of V'.
      for (Word x = 0; x < vp.cardinality(); ++x) {
        for (Word y = 0; y < vp.cardinality(); ++y) {
          ASSERT_EQ(oracle::pairing(d, t.apply(x), t.apply(y)), oracle::pairing(d - 2, x, y));
        }
      }
    }
  }
}

TEST(Tau, ImageIsAComplementOfTheLineInItsPerp) {
  for (int d = 2; d <= 8; d += 2) {
    const auto v = SymplecticSpace::make(d);
    const auto vp = SymplecticSpace::make(d - 2);
    for (int i = 1; i <= d + 1; ++i) {
      EXPECT_TRUE(check_complement(v, i)) << d << "/" << i;
      // Brute force: image plus the line is e_i^perp, and e_i is not in the image.
      const LinearEmbedding t = tau(v, i);
      std::set<Word> image;
      for (Word x = 0; x < vp.cardinality(); ++x) image.insert(t.apply(x));
      EXPECT_EQ(image.count(v.circular_bits(i)), 0U);
      std::set<Word> sum_space = image;
      for (Word w : image) sum_space.insert(w ^ v.circular_bits(i));
      EXPECT_EQ(sum_space, oracle::perp(d, {v.circular_bits(i)}));
    }
  }
}

TEST(Tau, CompositionIdentity) {
  for (int d = 4; d <= 10; d += 2) {
    const Report r = verify_composition_identity(d);
    EXPECT_TRUE(r.passed()) << r.to_text();
  }
}

TEST(Tau, CompositionMapsAgreeAtDimensionSix) {
  const auto v = SymplecticSpace::make(6);
  EXPECT_EQ(tau(v, 7).compose(tau_prime(v, 2)), tau(v, 3).compose(tau_prime(v, 5)));
  EXPECT_EQ(tau(v, 7).compose(tau_prime(v, 1)), tau(v, 2).compose(tau_prime(v, 5)));
  EXPECT_EQ(tau(v, 7).compose(tau_prime(v, 1)), tau(v, 1).compose(tau_prime(v, 5)));
}

TEST(GenericTau, RestatesTheNumberedMaps) {
  for (int d = 4; d <= 8; d += 2) {
    const auto v = SymplecticSpace::make(d);
    for (int i = 2; i <= d; ++i) EXPECT_EQ(generic_tau(v, i - 1, i), tau(v, i)) << d << "/" << i;
    EXPECT_EQ(generic_tau(v, d - 1, 1), tau(v, 1));
    EXPECT_EQ(generic_tau(v, d - 1, d + 1), tau(v, d + 1));
  }
}

TEST(GenericTau, BothOrientationsAreEmbeddings) {
  const auto v = SymplecticSpace::make(6);
  const auto vp = SymplecticSpace::make(4);
  for (int source = 1; source <= 5; ++source) {
    for (int target = 1; target <= 7; ++target) {
      for (auto o : {Orientation::kForward, Orientation::kReverse}) {
        const LinearEmbedding t = generic_tau(v, source, target, o);
        EXPECT_TRUE(t.is_injective());
        EXPECT_TRUE(t.preserves_form());
        // gamma' goes to the sum over the closed neighborhood of gamma.
        const Word neighborhood = v.circular_bits(target) ^ v.circular_bits(target % 7 + 1) ^
                                  v.circular_bits((target + 5) % 7 + 1);
        EXPECT_EQ(t.apply(vp.circular_bits(source)), neighborhood);
      }
    }
  }
}

}  // namespace
}  // namespace trifourier
