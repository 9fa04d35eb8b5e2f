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
#include "trifourier/permutation_group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace trifourier {

Permutation::Permutation(int points) : points_(points) {
  if (points < 0 || points > kMaxPoints) throw std::invalid_argument("permutations act on at most 5 points");
  for (int p = 0; p < points; ++p) image_[static_cast<std::size_t>(p)] = p + 1;
}

Permutation Permutation::from_cycles(int points, std::initializer_list<std::initializer_list<int>> cycles) {
  Permutation out(points);
  std::vector<bool> used(static_cast<std::size_t>(points) + 1, false);
  for (const auto& cycle : cycles) {
    const std::vector<int> c(cycle);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 1 || c[k] > points || used[static_cast<std::size_t>(c[k])]) {
        throw std::invalid_argument("cycles must be disjoint and lie in [1, n]");
      }
      used[static_cast<std::size_t>(c[k])] = true;
      out.image_[static_cast<std::size_t>(c[k] - 1)] = c[(k + 1) % c.size()];
    }
  }
  return out;
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  Permutation out(static_cast<int>(images.size()));
  std::vector<bool> hit(images.size() + 1, false);
  for (std::size_t k = 0; k < images.size(); ++k) {
    const int q = images[k];
    if (q < 1 || q > out.points_ || hit[static_cast<std::size_t>(q)]) {
      throw std::invalid_argument("images do not form a permutation");
    }
    hit[static_cast<std::size_t>(q)] = true;
    out.image_[k] = q;
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.points_ != b.points_) throw std::invalid_argument("permutations act on different sets");
  Permutation out(a.points_);
  for (int p = 1; p <= a.points_; ++p) out.image_[static_cast<std::size_t>(p - 1)] = a(b(p));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(points_);
  for (int p = 1; p <= points_; ++p) out.image_[static_cast<std::size_t>((*this)(p) - 1)] = p;
  return out;
}

bool Permutation::is_identity() const { return *this == Permutation(points_); }

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> out;
  std::vector<bool> seen(static_cast<std::size_t>(points_) + 1, false);
  for (int p = 1; p <= points_; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    int length = 0;
    for (int q = p; !seen[static_cast<std::size_t>(q)]; q = (*this)(q)) {
      seen[static_cast<std::size_t>(q)] = true;
      ++length;
    }
    out.push_back(length);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int Permutation::sign() const {
  int transpositions = 0;
  for (int length : cycle_type()) transpositions += length - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

int Permutation::order() const {
  int out = 1;
  for (int length : cycle_type()) out = std::lcm(out, length);
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(points_) + 1, false);
  for (int p = 1; p <= points_; ++p) {
    if (seen[static_cast<std::size_t>(p)] || (*this)(p) == p) continue;
    out += "(";
    for (int q = p; !seen[static_cast<std::size_t>(q)]; q = (*this)(q)) {
      seen[static_cast<std::size_t>(q)] = true;
      out += std::to_string(q);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

PermutationGroup::PermutationGroup(int points, std::vector<Permutation> elements)
    : points_(points), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  std::set<Permutation> placed;
  for (const Permutation& p : elements_) {
    if (placed.count(p)) continue;
    std::set<Permutation> cls;
    for (const Permutation& g : elements_) cls.insert(g * p * g.inverse());
    placed.insert(cls.begin(), cls.end());
    classes_.emplace_back(cls.begin(), cls.end());
  }
}

PermutationGroup PermutationGroup::symmetric(int points) {
  std::vector<int> images(static_cast<std::size_t>(points));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> elements;
  do {
    elements.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return PermutationGroup(points, std::move(elements));
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermutationGroup PermutationGroup::centralizer(const Permutation& x) const {
  std::vector<Permutation> out;
  for (const Permutation& g : elements_) {
    if (g * x == x * g) out.push_back(g);
  }
  return PermutationGroup(points_, std::move(out));
}

std::vector<std::vector<Permutation>> PermutationGroup::conjugacy_classes() const { return classes_; }

std::size_t PermutationGroup::class_index(const Permutation& p) const {
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    if (std::binary_search(classes_[k].begin(), classes_[k].end(), p)) return k;
  }
  throw std::invalid_argument(p.to_string() + " is not in the group");
}

}  // namespace trifourier
