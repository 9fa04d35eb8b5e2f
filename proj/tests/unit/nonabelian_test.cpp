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
#include "trifourier/nonabelian.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "trifourier/cyclotomic.hpp"
#include "trifourier/permutation_group.hpp"
#include "printers.hpp"

namespace trifourier {
namespace {

const CharacterTable& table_for(const NonabelianGroup& group, const std::string& element) {
  for (const auto& t : group.tables()) {
    if (t.element == element) return t;
  }
  throw std::runtime_error("no table for " + element);
}

// The pairing summed over all of the group in floating point.
std::complex<double> brute_entry(const NonabelianGroup& group, const MPair& row, const MPair& col) {
  const CharacterTable& tx = table_for(group, row.x);
  const CharacterTable& ty = table_for(group, col.x);
  const std::size_t sigma = *tx.find(row.rho);
  const std::size_t tau = *ty.find(col.rho);
  std::complex<double> sum = 0;
  for (const Permutation& g : group.group().elements()) {
    const Permutation conj_y = g * ty.x * g.inverse();
    if (tx.x * conj_y != conj_y * tx.x) continue;
    const Permutation conj_x = g.inverse() * tx.x * g;
    sum += tx.value(sigma, conj_y).evaluate() * std::conj(ty.value(tau, conj_x).evaluate());
  }
  return sum / static_cast<double>(tx.centralizer.order() * ty.centralizer.order());
}

CycNum q(long num, long den) { return CycNum(mpq_class(num, den)); }

TEST(Permutations, Basics) {
  const auto c = Permutation::from_cycles(4, {{1, 2, 3}});
  EXPECT_EQ(c.order(), 3);
  EXPECT_EQ(c.sign(), 1);
  EXPECT_EQ(c.cycle_type(), (std::vector<int>{3, 1}));
  EXPECT_TRUE((c * c * c).is_identity());
  EXPECT_EQ(c * c.inverse(), Permutation(4));
  const auto s5 = PermutationGroup::symmetric(5);
  EXPECT_EQ(s5.order(), 120U);
  EXPECT_EQ(s5.conjugacy_classes().size(), 7U);
  EXPECT_EQ(s5.centralizer(Permutation::from_cycles(5, {{1, 2}, {3, 4}})).order(), 8U);
  EXPECT_EQ(s5.centralizer(Permutation::from_cycles(5, {{1, 2}, {3, 4, 5}})).order(), 6U);
}

TEST(Nonabelian, SizesOfM) {
  EXPECT_EQ(NonabelianGroup::make(GroupName::kS2).pairs().size(), 4U);
  EXPECT_EQ(NonabelianGroup::make(GroupName::kS3).pairs().size(), 8U);
  EXPECT_EQ(NonabelianGroup::make(GroupName::kS4).pairs().size(), 21U);
  EXPECT_EQ(NonabelianGroup::make(GroupName::kS5).pairs().size(), 39U);
}

TEST(Nonabelian, CharacterTablesAreOrthogonal) {
  for (auto name : {GroupName::kS2, GroupName::kS3, GroupName::kS4, GroupName::kS5}) {
    const NonabelianGroup group = NonabelianGroup::make(name);
    for (const auto& t : group.tables()) {
      const Report r = t.verify_orthogonality();
      EXPECT_TRUE(r.passed()) << group_string(name) << " " << t.element << "\n" << r.to_text();
      // Sum of squared degrees is the centralizer order.
      const std::size_t identity = t.centralizer.class_index(Permutation(t.x.points()));
      mpq_class squares = 0;
      for (const auto& row : t.values) squares += row[identity].to_rational() * row[identity].to_rational();
      EXPECT_EQ(squares, static_cast<long>(t.centralizer.order()));
    }
  }
}

TEST(Nonabelian, EntriesMatchTheDirectSum) {
  for (auto name : {GroupName::kS2, GroupName::kS3, GroupName::kS4}) {
    const NonabelianGroup group = NonabelianGroup::make(name);
    const CycMatrix ft = nonabelian_ft(group);
    const auto& pairs = group.pairs();
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        const auto want = brute_entry(group, pairs[a], pairs[b]);
        EXPECT_NEAR(std::abs(ft[a][b].evaluate() - want), 0.0, 1e-9) << pairs[a].to_string() << pairs[b].to_string();
      }
    }
  }
}

TEST(Nonabelian, S5EntriesMatchTheDirectSumOnOneRow) {
  const NonabelianGroup group = NonabelianGroup::make(GroupName::kS5);
  const CycMatrix ft = nonabelian_ft(group);
  const auto& pairs = group.pairs();
  const std::size_t g5 = group.require_index({"g5", "zeta"});
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    EXPECT_NEAR(std::abs(ft[g5][b].evaluate() - brute_entry(group, pairs[g5], pairs[b])), 0.0, 1e-9);
  }
}

TEST(Nonabelian, S3RowOfTheUnitPair) {
  const NonabelianGroup group = NonabelianGroup::make(GroupName::kS3);
  const CycMatrix ft = nonabelian_ft(group);
  const std::map<MPair, CycNum> want{
      {{"1", "1"}, q(1, 6)},   {{"1", "r"}, q(1, 3)},      {{"1", "eps"}, q(1, 6)},
      {{"g2", "1"}, q(1, 2)},  {{"g2", "eps"}, q(1, 2)},   {{"g3", "1"}, q(1, 3)},
      {{"g3", "theta"}, q(1, 3)}, {{"g3", "theta^2"}, q(1, 3)}};
  const std::size_t unit = group.require_index({"1", "1"});
  for (const auto& [pair, value] : want) EXPECT_EQ(ft[group.require_index(pair)][unit], value) << pair.to_string();
}

TEST(Nonabelian, S3ImageOfTheSecondBasisElement) {
  // F((1,1) + (1,r)) = (1,1)/2 + (1,r) + (1,eps)/2 + (g2,1)/2 + (g2,eps)/2.
  const NonabelianGroup group = NonabelianGroup::make(GroupName::kS3);
  const CycMatrix ft = nonabelian_ft(group);
  const std::size_t u = group.require_index({"1", "1"});
  const std::size_t r = group.require_index({"1", "r"});
  const std::map<MPair, CycNum> want{{{"1", "1"}, q(1, 2)},   {{"1", "r"}, CycNum(1)},
                                     {{"1", "eps"}, q(1, 2)}, {{"g2", "1"}, q(1, 2)},
                                     {{"g2", "eps"}, q(1, 2)}};
  for (std::size_t a = 0; a < group.pairs().size(); ++a) {
    const auto it = want.find(group.pairs()[a]);
    EXPECT_EQ(ft[a][u] + ft[a][r], it == want.end() ? CycNum(0) : it->second) << group.pairs()[a].to_string();
  }
}

TEST(Nonabelian, SymmetricInvolutionsWithKnownTraces) {
  const std::map<GroupName, long> traces{
      {GroupName::kS2, 2}, {GroupName::kS3, 4}, {GroupName::kS4, 9}, {GroupName::kS5, 13}};
  for (const auto& [name, tr] : traces) {
    const NonabelianGroup group = NonabelianGroup::make(name);
    const CycMatrix ft = nonabelian_ft(group);
    EXPECT_TRUE(is_symmetric(ft));
    EXPECT_TRUE(is_identity(multiply(ft, ft)));
    EXPECT_EQ(trace(ft), CycNum(tr)) << group_string(name);
    const Report r = verify_ft(group, ft);
    EXPECT_TRUE(r.passed()) << r.to_text();
  }
}

TEST(Nonabelian, EntriesAreRealAndRationalBelowS5) {
  for (auto name : {GroupName::kS3, GroupName::kS4}) {
    for (const auto& row : nonabelian_ft(NonabelianGroup::make(name))) {
      for (const CycNum& v : row) EXPECT_TRUE(v.is_rational());
    }
  }
  bool irrational = false;
  for (const auto& row : nonabelian_ft(NonabelianGroup::make(GroupName::kS5))) {
    for (const CycNum& v : row) {
      EXPECT_EQ(v.conj(), v);
      EXPECT_TRUE(v.in_golden_field());
      irrational = irrational || !v.is_rational();
    }
  }
  EXPECT_TRUE(irrational);
}

TEST(Nonabelian, HyperplaneIsInvariant) {
  const NonabelianGroup group = NonabelianGroup::make(GroupName::kS5);
  const CycMatrix ft = nonabelian_ft(group);
  const HyperplaneResult h = hyperplane_check(group, ft);
  EXPECT_TRUE(h.report.passed()) << h.report.to_text();
  EXPECT_TRUE(h.lambda == CycNum(1) || h.lambda == CycNum(-1));

  // phi o F = lambda phi, checked column by column.
  const auto phi = hyperplane_functional(group);
  for (std::size_t b = 0; b < phi.size(); ++b) {
    CycNum image = 0;
    for (std::size_t a = 0; a < phi.size(); ++a) image += phi[a] * ft[a][b];
    EXPECT_EQ(image, h.lambda * phi[b]);
  }
  EXPECT_TRUE(phi[group.require_index({"1", "1"})].is_zero());
  CycNum value = phi[group.require_index({"g5", "zeta"})] + phi[group.require_index({"g5", "zeta^4"})] -
                 phi[group.require_index({"g5", "zeta^2"})] - phi[group.require_index({"g5", "zeta^3"})];
  // Each of the four coordinates contributes 1 in absolute value.
  EXPECT_EQ(abs(value.to_rational()), 4);
}

TEST(Nonabelian, ProductGroup) {
  const Report r = verify_product(GroupName::kS3, GroupName::kS2);
  EXPECT_TRUE(r.passed()) << r.to_text();
  const CycMatrix k = kronecker(nonabelian_ft(NonabelianGroup::make(GroupName::kS3)),
                                nonabelian_ft(NonabelianGroup::make(GroupName::kS2)));
  EXPECT_EQ(k.size(), 32U);
  EXPECT_EQ(trace(k), CycNum(8));
}

TEST(Nonabelian, Labels) {
  EXPECT_EQ(parse_group("s4"), GroupName::kS4);
  EXPECT_THROW(parse_group("s6"), std::invalid_argument);
  EXPECT_EQ(normalize_label("ε"), "eps");
  EXPECT_EQ(display_label("theta^2"), "θ²");
  EXPECT_EQ(display_label("g2'"), "g2′");
}

}  // namespace
}  // namespace trifourier
