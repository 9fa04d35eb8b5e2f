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
#ifndef TRIFOURIER_PERMUTATION_GROUP_HPP_
#define TRIFOURIER_PERMUTATION_GROUP_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace trifourier {

/// A permutation of {1, ..., n}, n <= 5.
class Permutation {
 public:
  static constexpr int kMaxPoints = 5;

  Permutation() = default;
  explicit Permutation(int points);
  /// Product of the given cycles, e.g. {{1, 2, 3}, {4, 5}}.
  static Permutation from_cycles(int points, std::initializer_list<std::initializer_list<int>> cycles);
  /// One-line notation: p -> images[p-1].
  static Permutation from_images(const std::vector<int>& images);

  int points() const { return points_; }
  /// Image of point p (1-based).
  int operator()(int p) const { return image_[static_cast<std::size_t>(p - 1)]; }

  /// (a * b)(p) = a(b(p)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;
  int order() const;
  /// Cycle lengths in decreasing order, fixed points included.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Cycle notation without fixed points, "()" for the identity.
  std::string to_string() const;

 private:
  int points_ = 0;
  std::array<int, kMaxPoints> image_{};
};

/// A subgroup of S_n listed element by element.
class PermutationGroup {
 public:
  static PermutationGroup symmetric(int points);

  int points() const { return points_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;

  PermutationGroup centralizer(const Permutation& x) const;
  /// Conjugacy classes of this group, each sorted; classes ordered by their
  /// smallest element.
  std::vector<std::vector<Permutation>> conjugacy_classes() const;
  /// Index into conjugacy_classes() of the class containing p.
  std::size_t class_index(const Permutation& p) const;

 private:
  PermutationGroup(int points, std::vector<Permutation> elements);

  int points_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<Permutation>> classes_;
};

}  // namespace trifourier

#endif  // TRIFOURIER_PERMUTATION_GROUP_HPP_
