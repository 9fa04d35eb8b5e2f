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
#ifndef TRIFOURIER_TAU_HPP_
#define TRIFOURIER_TAU_HPP_

#include <string>
#include <vector>

#include "trifourier/gf2.hpp"
#include "trifourier/report.hpp"

namespace trifourier {

/// A linear map V' -> V between symplectic spaces of dimensions D-2 and D,
/// stored by the images of the D-1 circular vectors e'_1..e'_{D-1} of V'.
/// The coordinate matrix is given by the first D-2 images.
class LinearEmbedding {
 public:
  LinearEmbedding(int source_dimension, int target_dimension, std::vector<Word> circular_images);

  int source_dimension() const { return source_dimension_; }
  int target_dimension() const { return target_dimension_; }
  const std::vector<Word>& circular_images() const { return images_; }

  Word apply(Word source) const;
  GF2Vector apply(const GF2Vector& source) const;
  Subspace apply(const Subspace& source) const;

  /// this o inner, where inner maps into this map's source.
  LinearEmbedding compose(const LinearEmbedding& inner) const;

  /// Image of the last circular vector equals the sum of the others.
  bool images_consistent() const;
  bool is_injective() const;
  /// (tau u, tau v) = (u, v) on all pairs of coordinate vectors.
  bool preserves_form() const;
  bool is_zero() const;

  /// Matrix equality (the circular images determine the map).
  friend bool operator==(const LinearEmbedding& a, const LinearEmbedding& b);

  std::string to_string() const;

 private:
  int source_dimension_;
  int target_dimension_;
  std::vector<Word> images_;
};

/// tau_i : V' -> V for i in [1, D+1]. Zero map out of the zero space when D = 2.
LinearEmbedding tau(const SymplecticSpace& target, int i);

/// tau'_i : V'' -> V' for i in [1, D-1], where D is the dimension of `space`.
/// Requires D >= 4; the zero map when D = 4.
LinearEmbedding tau_prime(const SymplecticSpace& space, int i);

/// tau_i(V') is a complement of F2 e_i inside e_i^perp.
bool check_complement(const SymplecticSpace& space, int i);

/// Checks tau_{D+1} tau'_i = tau_{i+1} tau'_{D-1} for i in [1, D-2] (and
/// = tau_1 tau'_{D-1} when i = 1), and the induced subspace identity with
/// j = i + 1 for every member of the family of V''.
Report verify_composition_identity(int dimension);

/// The two ways a path Gamma' - {gamma'} can be laid onto Gamma - [gamma].
enum class Orientation { kForward, kReverse };

/// The embedding determined by a pair of vertices of the circular bases:
/// gamma' goes to the sum over the closed neighbourhood [gamma], and the
/// remaining vertices gamma'+k go to gamma+1+k (kForward) or gamma-1-k
/// (kReverse). Vertices are 1-based indices into e'_1..e'_{D-1} and
/// e_1..e_{D+1}. Requires D >= 4.
LinearEmbedding generic_tau(const SymplecticSpace& target, int source_vertex, int target_vertex,
                            Orientation orientation = Orientation::kForward);

}  // namespace trifourier

#endif  // TRIFOURIER_TAU_HPP_
