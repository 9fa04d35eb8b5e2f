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
#include "trifourier/dihedral.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace trifourier {
namespace {

using Permutation = std::vector<std::size_t>;

Permutation compose_permutations(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] = a[b[k]];
  return out;
}

std::size_t generated_order(const Permutation& r, const Permutation& s) {
  std::set<Permutation> seen;
  Permutation start(r.size());
  for (std::size_t k = 0; k < start.size(); ++k) start[k] = k;
  std::vector<Permutation> frontier{start};
  seen.insert(start);
  while (!frontier.empty()) {
    Permutation p = std::move(frontier.back());
    frontier.pop_back();
    for (const Permutation* g : {&r, &s}) {
      Permutation q = compose_permutations(*g, p);
      if (seen.insert(q).second) frontier.push_back(std::move(q));
    }
  }
  return seen.size();
}

}  // namespace

SympAuto::SympAuto(int dimension, std::vector<Word> columns) : dimension_(dimension), columns_(std::move(columns)) {
  require_valid_dimension(dimension);
  if (columns_.size() != static_cast<std::size_t>(dimension)) {
    throw DimensionError("an automorphism of V needs D column images");
  }
}

SympAuto SympAuto::identity(int dimension) {
  std::vector<Word> columns(static_cast<std::size_t>(dimension));
  for (int i = 0; i < dimension; ++i) columns[static_cast<std::size_t>(i)] = Word{1} << i;
  return SympAuto(dimension, std::move(columns));
}

Word SympAuto::apply(Word x) const {
  Word out = 0;
  for (int i = 0; i < dimension_; ++i) {
    if ((x >> i) & 1U) out ^= columns_[static_cast<std::size_t>(i)];
  }
  return out;
}

Subspace SympAuto::apply(const Subspace& subspace) const {
  std::vector<Word> images;
  images.reserve(subspace.basis().size());
  for (Word w : subspace.basis()) images.push_back(apply(w));
  return Subspace::span(dimension_, images);
}

SympAuto SympAuto::compose(const SympAuto& other) const {
  if (other.dimension_ != dimension_) throw DimensionError("cannot compose automorphisms of different spaces");
  std::vector<Word> columns;
  columns.reserve(columns_.size());
  for (Word c : other.columns_) columns.push_back(apply(c));
  return SympAuto(dimension_, std::move(columns));
}

SympAuto SympAuto::power(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative power");
  SympAuto out = identity(dimension_);
  for (int k = 0; k < exponent; ++k) out = compose(out);
  return out;
}

bool SympAuto::preserves_form(const SymplecticSpace& space) const {
  if (space.dimension() != dimension_) return false;
  for (int i = 0; i < dimension_; ++i) {
    for (int j = 0; j < dimension_; ++j) {
      const int before = space.gram(i + 1, j + 1) ? 1 : 0;
      const int after =
          space.pairing_bits(columns_[static_cast<std::size_t>(i)], columns_[static_cast<std::size_t>(j)]);
      if (before != after) return false;
    }
  }
  return true;
}

LinearEmbedding SympAuto::as_embedding(const SymplecticSpace& space) const {
  std::vector<Word> images;
  for (int i = 1; i <= dimension_ + 1; ++i) images.push_back(apply(space.circular_bits(i)));
  return LinearEmbedding(dimension_, dimension_, std::move(images));
}

SympAuto rotation(const SymplecticSpace& space) {
  const int n = space.dimension();
  std::vector<Word> columns;
  for (int i = 1; i <= n; ++i) columns.push_back(space.circular_bits(i + 1));
  return SympAuto(n, std::move(columns));
}

SympAuto reflection(const SymplecticSpace& space) {
  const int n = space.dimension();
  std::vector<Word> columns;
  for (int i = 1; i <= n; ++i) columns.push_back(space.circular_bits(n + 1 - i));
  return SympAuto(n, std::move(columns));
}

Report verify_tau_intertwining(int dimension) {
  Report report("intertwining");
  const SymplecticSpace space = SymplecticSpace::make(dimension);
  if (dimension < 2) {
    report.add("defined", false, "tau_i needs D >= 2");
    return report;
  }
  const SymplecticSpace prime = SymplecticSpace::make(dimension - 2);
  const LinearEmbedding r = rotation(space).as_embedding(space);
  const LinearEmbedding s = reflection(space).as_embedding(space);
  const LinearEmbedding r_prime = rotation(prime).as_embedding(prime);
  const LinearEmbedding s_prime = reflection(prime).as_embedding(prime);
  for (int i = 1; i <= dimension + 1; ++i) {
    // For i = D the shift R' is absorbed: R tau_D already equals tau_{D+1}.
    const int next = i == dimension + 1 ? 1 : i + 1;
    const bool plain = i >= dimension;
    const int mirror = i == dimension + 1 ? dimension + 1 : dimension + 1 - i;
    const LinearEmbedding right = plain ? tau(space, next) : tau(space, next).compose(r_prime);
    const bool rotates = r.compose(tau(space, i)) == right;
    const bool reflects = s.compose(tau(space, i)) == tau(space, mirror).compose(s_prime);
    report.add("R-tau" + std::to_string(i), rotates,
               "R tau_i vs tau_" + std::to_string(next) + (plain ? "" : " R'"));
    report.add("S-tau" + std::to_string(i), reflects, "S tau_i vs tau_" + std::to_string(mirror) + " S'");
  }
  if (dimension >= 4) {
    // R' is not the identity here, so tau_{D+1} R' cannot also equal R tau_D.
    const bool shifted = r.compose(tau(space, dimension)) == tau(space, dimension + 1).compose(r_prime);
    report.add("R-tauD-no-shift", !shifted, "R tau_D differs from tau_{D+1} R'");
  }
  return report;
}

Report verify_dihedral_relations(int dimension) {
  Report report("dihedral");
  const SymplecticSpace space = SymplecticSpace::make(dimension);
  const SympAuto r = rotation(space);
  const SympAuto s = reflection(space);
  const SympAuto one = SympAuto::identity(dimension);
  report.add("R-symplectic", r.preserves_form(space));
  report.add("S-symplectic", s.preserves_form(space));
  report.add("R-order", r.power(dimension + 1) == one, "R^(D+1) = 1");
  report.add("S-order", s.compose(s) == one, "S^2 = 1");
  report.add("SRS", s.compose(r).compose(s) == r.power(dimension), "S R S = R^-1");
  return report;
}

StabilityResult verify_family_stability(const Family& family) {
  StabilityResult result;
  result.report = Report("stability");
  const SymplecticSpace& space = family.space();
  const std::size_t n = family.size();
  const SympAuto r = rotation(space);
  const SympAuto s = reflection(space);

  std::size_t escapes = 0;
  auto induced = [&](const SympAuto& g, std::vector<std::size_t>& perm) {
    perm.assign(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto image = family.find(g.apply(family[k].space));
      if (image) {
        perm[k] = *image;
      } else {
        ++escapes;
      }
    }
  };
  induced(r, result.rotation_permutation);
  induced(s, result.reflection_permutation);
  result.report.add("closed", escapes == 0, std::to_string(escapes) + " images leave the family");
  if (escapes != 0) return result;

  std::vector<bool> placed(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    if (placed[k]) continue;
    Orbit orbit;
    std::vector<std::size_t> stack{k};
    placed[k] = true;
    while (!stack.empty()) {
      const std::size_t m = stack.back();
      stack.pop_back();
      orbit.members.push_back(m);
      for (std::size_t next : {result.rotation_permutation[m], result.reflection_permutation[m]}) {
        if (!placed[next]) {
          placed[next] = true;
          stack.push_back(next);
        }
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    result.orbits.push_back(std::move(orbit));
  }

  const std::size_t bound = 2 * static_cast<std::size_t>(family.dimension() + 1);
  std::size_t bad_orbits = 0;
  for (const Orbit& orbit : result.orbits) bad_orbits += bound % orbit.members.size() != 0;
  result.report.add("orbit-sizes", bad_orbits == 0,
                    std::to_string(bad_orbits) + " orbits with size not dividing " + std::to_string(bound));
  result.group_order = generated_order(result.rotation_permutation, result.reflection_permutation);
  result.report.add("group-order", bound % result.group_order == 0,
                    "generated group of order " + std::to_string(result.group_order));
  return result;
}

}  // namespace trifourier
