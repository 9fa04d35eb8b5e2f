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

#include <algorithm>
#include <set>
#include <sstream>

namespace trifourier {
namespace {

std::string join_indices(const std::vector<std::size_t>& xs, const Family& family) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    out += family[xs[k]].label();
  }
  return out;
}

std::string fiber_text(const Family& family, const Fiber& fiber) {
  return "fiber of " + family[fiber.root].label() + " = {" + join_indices(fiber.members, family) + "}";
}

}  // namespace

std::string Provenance::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kZero:
      return "0";
    case Kind::kStandard:
      os << "E_" << index;
      return os.str();
    case Kind::kLine:
      os << "line " << (parent ? parent->to_string() : "");
      return os.str();
    case Kind::kTau:
      os << "tau_" << index << "(" << (parent ? parent->to_string() : "?") << ") + e_" << index;
      return os.str();
    case Kind::kGeneric:
      os << "tau~_{" << source_vertex << "," << index << "}("
         << (parent ? parent->to_string() : "?") << ") + e_" << index;
      return os.str();
  }
  return {};
}

std::string FamilyEntry::label() const {
  if (intervals.empty()) return "∅";
  std::string out = "<";
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    if (k) out += ',';
    out += intervals[k].compact();
  }
  return out + ">";
}

std::vector<IntervalLabel> interval_basis(const SymplecticSpace& space, const Subspace& subspace) {
  const int D = space.dimension();
  if (subspace.ambient_dimension() != D) throw DimensionError("subspace is not in this space");
  std::vector<IntervalLabel> out;
  std::vector<Word> words;
  for (int a = 1; a <= D; ++a) {
    for (int b = a; b <= D; ++b) {
      const Word w = space.interval_bits(a, b);
      if (subspace.contains(w)) {
        out.push_back(IntervalLabel{D, a, b});
        words.push_back(w);
      }
    }
  }
  if (static_cast<int>(out.size()) != subspace.dimension() ||
      rank(words) != subspace.dimension()) {
    throw FamilyError("subspace " + subspace.to_string() + " contains " +
                      std::to_string(out.size()) + " interval vectors of rank " +
                      std::to_string(rank(words)) + " but has dimension " +
                      std::to_string(subspace.dimension()));
  }
  std::sort(out.begin(), out.end(), label_display_less);
  return out;
}

Family Family::from_members(int dimension, std::map<Subspace, Provenance> members) {
  Family family(SymplecticSpace::make(dimension));
  family.entries_.reserve(members.size());
  for (auto& [space, provenance] : members) {
    if (space.ambient_dimension() != dimension) throw DimensionError("member in the wrong space");
    FamilyEntry entry;
    entry.space = space;
    entry.intervals = interval_basis(family.space_, space);
    entry.even_count = static_cast<int>(std::count_if(
        entry.intervals.begin(), entry.intervals.end(), [](const IntervalLabel& l) { return l.is_even(); }));
    entry.provenance = std::move(provenance);
    family.index_.emplace(space, family.entries_.size());
    family.entries_.push_back(std::move(entry));
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < family.entries_.size(); ++k) {
    auto& entry = family.entries_[k];
    std::vector<Word> odd;
    for (const auto& l : entry.intervals) {
      if (!l.is_even()) odd.push_back(family.space_.interval_bits(l.first, l.last));
    }
    const Subspace shriek = Subspace::span(dimension, odd);
    const auto it = family.index_.find(shriek);
    if (it == family.index_.end()) {
      throw FamilyError("E^! of " + entry.label() + " is not a member");
    }
    entry.shriek = it->second;
    groups[entry.shriek].push_back(k);
  }

  for (auto& [root, list] : groups) {
    std::stable_sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      return family.entries_[a].even_count < family.entries_[b].even_count;
    });
    Fiber fiber{root, list};
    const int k = fiber.parameter();
    for (int j = 0; j <= k; ++j) {
      auto& entry = family.entries_[list[static_cast<std::size_t>(j)]];
      entry.fiber = family.fibers_.size();
      entry.fiber_position = j;
      entry.fiber_parameter = k;
      entry.kappa = list[static_cast<std::size_t>(k - j)];
    }
    family.fibers_.push_back(std::move(fiber));
  }
  return family;
}

std::optional<std::size_t> Family::find(const Subspace& subspace) const {
  const auto it = index_.find(subspace);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Subspace> Family::members() const {
  std::vector<Subspace> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.space);
  return out;
}

std::vector<std::size_t> Family::with_dimension(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].dimension() == k) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Family::with_even_count(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].even_count == k) out.push_back(i);
  }
  return out;
}

Subspace standard_subspace(const SymplecticSpace& space, int k) {
  const int D = space.dimension();
  if (k < 0 || k > space.half_dimension()) throw std::out_of_range("E_k needs k in [0, d]");
  std::vector<Word> basis;
  for (int a = 1; a <= k; ++a) basis.push_back(space.interval_bits(a, D + 1 - a));
  return Subspace::span(D, basis);
}

namespace {

using MemberMap = std::map<Subspace, Provenance>;

MemberMap family_members(int dimension) {
  require_valid_dimension(dimension);
  MemberMap out;
  if (dimension == 0) {
    out.emplace(Subspace(0), Provenance{});
    return out;
  }
  const auto V = SymplecticSpace::make(dimension);
  const MemberMap smaller = family_members(dimension - 2);
  for (int i = 1; i <= dimension; ++i) {
    const LinearEmbedding t = tau(V, i);
    for (const auto& [Ep, unused] : smaller) {
      out.try_emplace(t.apply(Ep).with(V.circular_bits(i)),
                      Provenance{Provenance::Kind::kTau, i, 0, Ep});
    }
  }
  for (int k = 0; k <= V.half_dimension(); ++k) {
    out.try_emplace(standard_subspace(V, k),
                    Provenance{k == 0 ? Provenance::Kind::kZero : Provenance::Kind::kStandard, k,
                               0, std::nullopt});
  }
  return out;
}

MemberMap prime_members(int dimension) {
  require_valid_dimension(dimension);
  MemberMap out;
  out.emplace(Subspace(dimension), Provenance{});
  if (dimension == 0) return out;
  const auto V = SymplecticSpace::make(dimension);
  const MemberMap smaller = prime_members(dimension - 2);
  for (int i = 1; i <= dimension + 1; ++i) {
    const LinearEmbedding t = tau(V, i);
    for (const auto& [Ep, unused] : smaller) {
      out.try_emplace(t.apply(Ep).with(V.circular_bits(i)),
                      Provenance{Provenance::Kind::kTau, i, 0, Ep});
    }
  }
  return out;
}

MemberMap ucb_members(int dimension, Orientation orientation) {
  require_valid_dimension(dimension);
  MemberMap out;
  out.emplace(Subspace(dimension), Provenance{});
  if (dimension == 0) return out;
  const auto V = SymplecticSpace::make(dimension);
  if (dimension == 2) {
    for (Word w = 1; w < 4; ++w) {
      out.try_emplace(Subspace::span(2, {w}),
                      Provenance{Provenance::Kind::kLine, static_cast<int>(w), 0, std::nullopt});
    }
    return out;
  }
  const MemberMap smaller = ucb_members(dimension - 2, orientation);
  for (int source = 1; source <= dimension - 1; ++source) {
    for (int target = 1; target <= dimension + 1; ++target) {
      const LinearEmbedding t = generic_tau(V, source, target, orientation);
      for (const auto& [Ep, unused] : smaller) {
        out.try_emplace(t.apply(Ep).with(V.circular_bits(target)),
                        Provenance{Provenance::Kind::kGeneric, target, source, Ep});
      }
    }
  }
  return out;
}

}  // namespace

Family build_family(int dimension) {
  return Family::from_members(dimension, family_members(dimension));
}

Family build_family_prime(int dimension) {
  return Family::from_members(dimension, prime_members(dimension));
}

Family build_family_ucb(int dimension, Orientation orientation) {
  return Family::from_members(dimension, ucb_members(dimension, orientation));
}

int delta(long long n) {
  const long long r = ((n % 4) + 4) % 4;
  return (r == 1 || r == 2) ? -1 : 1;
}

Report verify_fibers(const Family& family) {
  Report report("fibers D=" + std::to_string(family.dimension()));
  const int d = family.half_dimension();
  std::string size_fail, n_fail, dim_fail, root_fail, kappa_fail;
  for (const auto& fiber : family.fibers()) {
    const int k = fiber.parameter();
    const auto& root = family[fiber.root];
    if (root.dimension() != d - k && size_fail.empty()) size_fail = fiber_text(family, fiber);
    if ((root.even_count != 0 || root.shriek != fiber.root || fiber.members.front() != fiber.root) &&
        root_fail.empty()) {
      root_fail = fiber_text(family, fiber);
    }
    for (int j = 0; j <= k; ++j) {
      const auto& member = family[fiber.members[static_cast<std::size_t>(j)]];
      if (member.even_count != j && n_fail.empty()) n_fail = fiber_text(family, fiber);
      if (member.dimension() != d - k + j && dim_fail.empty()) dim_fail = fiber_text(family, fiber);
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[family[i].kappa].kappa != i && kappa_fail.empty()) kappa_fail = family[i].label();
  }
  report.add("fiber-size", size_fail.empty(),
             size_fail.empty() ? std::to_string(family.fibers().size()) + " fibers, E1 in F_{d-k} has k+1 members"
                               : size_fail);
  report.add("fiber-root", root_fail.empty(), root_fail.empty() ? "E1(0) = E1 with n = 0" : root_fail);
  report.add("fiber-n-values", n_fail.empty(), n_fail.empty() ? "n(E1(j)) = j" : n_fail);
  report.add("fiber-dimensions", dim_fail.empty(),
             dim_fail.empty() ? "dim E1(j) = d-k+j" : dim_fail);
  report.add("kappa-involution", kappa_fail.empty(),
             kappa_fail.empty() ? "kappa^2 = id" : "fails at " + kappa_fail);
  return report;
}

mpz_class binomial(int n, int k) {
  mpz_class out;
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class alternating_binomial_sum(int half_dimension) {
  mpz_class sum = 0;
  for (int k = 0; k <= half_dimension; ++k) {
    sum += delta(half_dimension - k) * binomial(2 * half_dimension + 1, k);
  }
  return sum;
}

Report verify_binomial_identity(int max_half_dimension) {
  Report report("binomial-identity");
  for (int d = 0; d <= max_half_dimension; ++d) {
    const mpz_class lhs = alternating_binomial_sum(d);
    const mpz_class rhs = mpz_class(1) << d;
    report.add("d=" + std::to_string(d), lhs == rhs, lhs.get_str() + " vs 2^" + std::to_string(d));
  }
  return report;
}

Report verify_counts(const Family& family) {
  const int D = family.dimension();
  const int d = family.half_dimension();
  Report report("counts D=" + std::to_string(D));
  report.add("total", mpz_class(family.size()) == (mpz_class(1) << D),
             std::to_string(family.size()) + " members, 2^D = " + mpz_class(mpz_class(1) << D).get_str());
  for (int k = 0; k <= d; ++k) {
    const auto by_dim = family.with_dimension(k);
    const auto by_n = family.with_even_count(k);
    const mpz_class want_dim = binomial(D + 1, k);
    const mpz_class want_n = binomial(D + 1, d - k);
    report.add("|F_" + std::to_string(k) + "|", mpz_class(by_dim.size()) == want_dim,
               std::to_string(by_dim.size()) + " vs C(" + std::to_string(D + 1) + "," +
                   std::to_string(k) + ")=" + want_dim.get_str());
    report.add("|F^" + std::to_string(k) + "|", mpz_class(by_n.size()) == want_n,
               std::to_string(by_n.size()) + " vs C(" + std::to_string(D + 1) + "," +
                   std::to_string(d - k) + ")=" + want_n.get_str());
    std::set<std::size_t> image;
    for (std::size_t i : by_n) image.insert(family[i].kappa);
    const auto complementary = family.with_dimension(d - k);
    const std::set<std::size_t> target(complementary.begin(), complementary.end());
    report.add("kappa(F^" + std::to_string(k) + ")=F_" + std::to_string(d - k), image == target);
  }
  const mpz_class sum = alternating_binomial_sum(d);
  report.add("alternating-sum", sum == (mpz_class(1) << d),
             "sum delta(d-k) C(D+1,k) = " + sum.get_str());
  return report;
}

}  // namespace trifourier
