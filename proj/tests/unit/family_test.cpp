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
#include "trifourier/family.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "printers.hpp"

namespace trifourier {
namespace {

std::set<oracle::PointSet> point_sets(const Family& family) {
  std::set<oracle::PointSet> out;
  for (const auto& entry : family.entries()) {
    const auto elements = entry.space.elements();
    out.insert(oracle::PointSet(elements.begin(), elements.end()));
  }
  return out;
}

const FamilyEntry& entry_labelled(const Family& family, const std::string& label) {
  for (const auto& e : family.entries()) {
    if (e.label() == label) return e;
  }
  throw std::runtime_error("no member labelled " + label);
}

TEST(Family, SmallCases) {
  const Family f0 = build_family(0);
  ASSERT_EQ(f0.size(), 1U);
  EXPECT_EQ(f0[0].dimension(), 0);

  const Family f2 = build_family(2);
  EXPECT_EQ(f2.members(), (std::vector<Subspace>{Subspace(2), Subspace::span(2, {0b01}),
                                                 Subspace::span(2, {0b10}), Subspace::span(2, {0b11})}));
}

TEST(Family, MatchesTheRecursiveDefinition) {
  for (int d = 0; d <= 8; d += 2) {
    const Family f = build_family(d);
    EXPECT_EQ(f.size(), std::size_t{1} << d);
    EXPECT_EQ(point_sets(f), oracle::family(d)) << "D=" << d;
  }
}

TEST(Family, MembersAreIsotropic) {
  for (int d = 2; d <= 6; d += 2) {
    const Family family = build_family(d);
    for (const auto& entry : family.entries()) {
      const auto elements = entry.space.elements();
      EXPECT_TRUE(oracle::isotropic(d, oracle::PointSet(elements.begin(), elements.end())))
          << entry.label();
    }
  }
}

TEST(Family, EquivalentConstructions) {
  for (int d = 0; d <= 8; d += 2) {
    const auto members = build_family(d).members();
    EXPECT_EQ(build_family_prime(d).members(), members) << "D=" << d;
    EXPECT_EQ(build_family_ucb(d).members(), members) << "D=" << d;
    EXPECT_EQ(build_family_ucb(d, Orientation::kReverse).members(), members) << "D=" << d;
  }
}

TEST(Family, LineFromTheLastTau) {
  // tau_5(0) + F2 e_5 = F2 e_[1,4] = E_1.
  const auto v = SymplecticSpace::make(4);
  const Subspace line = Subspace(4).with(v.circular_bits(5));
  EXPECT_EQ(line, standard_subspace(v, 1));
  EXPECT_TRUE(build_family_prime(4).contains(line));
}

TEST(Family, IntervalBases) {
  const auto v = SymplecticSpace::make(4);
  const auto e = Subspace::span(4, {0b0001, 0b1100});
  EXPECT_EQ(interval_basis(v, e), (std::vector<IntervalLabel>{{4, 1, 1}, {4, 3, 4}}));
  EXPECT_TRUE(interval_basis(v, Subspace(4)).empty());
  const auto b2 = interval_basis(v, standard_subspace(v, 2));
  EXPECT_EQ(std::set<IntervalLabel>(b2.begin(), b2.end()),
            (std::set<IntervalLabel>{{4, 1, 4}, {4, 2, 3}}));
}

TEST(Family, FibersAtDimensionFour) {
  const Family f = build_family(4);
  const FamilyEntry& zero = entry_labelled(f, "∅");
  const Fiber& root = f.fibers()[zero.fiber];
  ASSERT_EQ(root.members.size(), 3U);
  std::vector<std::string> labels;
  std::vector<int> n_values;
  for (std::size_t k : root.members) {
    labels.push_back(f[k].label());
    n_values.push_back(f[k].even_count);
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"∅", "<5>", "<5,451>"}));
  EXPECT_EQ(n_values, (std::vector<int>{0, 1, 2}));

  const FamilyEntry& two = entry_labelled(f, "<2>");
  const FamilyEntry& two_five = entry_labelled(f, "<2,5>");
  EXPECT_EQ(two.fiber, two_five.fiber);
  EXPECT_EQ(two.even_count, 0);
  EXPECT_EQ(two_five.even_count, 1);
  EXPECT_EQ(f[two_five.kappa].label(), "<2>");
  EXPECT_EQ(f[two.kappa].label(), "<2,5>");
}

TEST(Family, SingletonFibersAreFixedByKappa) {
  const Family f = build_family(2);
  const FamilyEntry& one = entry_labelled(f, "<1>");
  EXPECT_EQ(f.fibers()[one.fiber].members.size(), 1U);
  EXPECT_EQ(&f[one.kappa], &one);
}

TEST(Family, KappaIsAnInvolution) {
  for (int d = 2; d <= 8; d += 2) {
    const Family f = build_family(d);
    for (std::size_t k = 0; k < f.size(); ++k) EXPECT_EQ(f[f[k].kappa].kappa, k);
    EXPECT_TRUE(verify_fibers(f).passed()) << verify_fibers(f).to_text();
  }
}

TEST(Family, CountsAgainstBinomials) {
  for (int d = 0; d <= 8; d += 2) {
    const Family f = build_family(d);
    const int h = d / 2;
    for (int k = 0; k <= h; ++k) {
      EXPECT_EQ(mpz_class(static_cast<unsigned long>(f.with_dimension(k).size())), oracle::choose(d + 1, k));
      EXPECT_EQ(mpz_class(static_cast<unsigned long>(f.with_even_count(k).size())),
                oracle::choose(d + 1, h - k));
    }
    EXPECT_TRUE(verify_counts(f).passed()) << verify_counts(f).to_text();
  }
  EXPECT_EQ(build_family(6).with_dimension(3).size(), 35U);
}

TEST(Family, Delta) {
  EXPECT_EQ(delta(0), 1);
  EXPECT_EQ(delta(1), -1);
  EXPECT_EQ(delta(2), -1);
  EXPECT_EQ(delta(3), 1);
  EXPECT_EQ(delta(4), 1);
}

TEST(Family, AlternatingBinomialIdentity) {
  for (int h = 0; h <= 16; ++h) {
    mpz_class sum = 0;
    for (int k = 0; k <= h; ++k) {
      const long n = h - k;
      sum += ((n * (n + 1) / 2) % 2 == 0 ? 1 : -1) * oracle::choose(2 * h + 1, k);
    }
    EXPECT_EQ(sum, mpz_class(mpz_class(1) << h)) << "d=" << h;
    EXPECT_EQ(alternating_binomial_sum(h), sum);
  }
  EXPECT_TRUE(verify_binomial_identity(16).passed());
}

}  // namespace
}  // namespace trifourier
