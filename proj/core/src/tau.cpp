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

#include <sstream>

#include "trifourier/family.hpp"

namespace trifourier {
namespace {

// e_j with the index read cyclically mod D+1.
Word circ(const SymplecticSpace& space, int j) {
  const int n = space.dimension() + 1;
  return space.circular_bits(((j - 1) % n + n) % n + 1);
}

}  // namespace

LinearEmbedding::LinearEmbedding(int source_dimension, int target_dimension,
                                 std::vector<Word> circular_images)
    : source_dimension_(source_dimension),
      target_dimension_(target_dimension),
      images_(std::move(circular_images)) {
  if (source_dimension < 0 || target_dimension < source_dimension) {
    throw DimensionError("embedding dimensions are inconsistent");
  }
  if (images_.size() != static_cast<std::size_t>(source_dimension + 1)) {
    throw DimensionError("an embedding needs one image per circular vector of the source");
  }
  for (Word w : images_) {
    if (w & ~low_mask(target_dimension)) throw DimensionError("image does not fit the target");
  }
}

Word LinearEmbedding::apply(Word source) const {
  Word out = 0;
  for (int j = 0; j < source_dimension_; ++j) {
    if ((source >> j) & 1u) out ^= images_[static_cast<std::size_t>(j)];
  }
  return out;
}

GF2Vector LinearEmbedding::apply(const GF2Vector& source) const {
  if (source.dimension() != source_dimension_) throw DimensionError("vector is not in the source");
  return GF2Vector(target_dimension_, apply(source.bits()));
}

Subspace LinearEmbedding::apply(const Subspace& source) const {
  if (source.ambient_dimension() != source_dimension_) {
    throw DimensionError("subspace is not in the source");
  }
  std::vector<Word> images;
  images.reserve(source.basis().size());
  for (Word b : source.basis()) images.push_back(apply(b));
  return Subspace::span(target_dimension_, images);
}

LinearEmbedding LinearEmbedding::compose(const LinearEmbedding& inner) const {
  if (inner.target_dimension_ != source_dimension_) {
    throw DimensionError("cannot compose: inner map does not land in the source");
  }
  std::vector<Word> images;
  images.reserve(inner.images_.size());
  for (Word w : inner.images_) images.push_back(apply(w));
  return LinearEmbedding(inner.source_dimension_, target_dimension_, std::move(images));
}

bool LinearEmbedding::images_consistent() const {
  Word sum = 0;
  for (Word w : images_) sum ^= w;
  return sum == 0;
}

bool LinearEmbedding::is_injective() const {
  std::vector<Word> columns(images_.begin(), images_.begin() + source_dimension_);
  return rank(columns) == source_dimension_;
}

bool LinearEmbedding::preserves_form() const {
  const auto source = SymplecticSpace::make(source_dimension_);
  const auto target = SymplecticSpace::make(target_dimension_);
  for (int a = 1; a <= source_dimension_; ++a) {
    for (int b = 1; b <= source_dimension_; ++b) {
      const Word ua = Word{1} << (a - 1);
      const Word ub = Word{1} << (b - 1);
      if (source.pairing_bits(ua, ub) != target.pairing_bits(apply(ua), apply(ub))) return false;
    }
  }
  return true;
}

bool LinearEmbedding::is_zero() const {
  for (Word w : images_) {
    if (w) return false;
  }
  return true;
}

bool operator==(const LinearEmbedding& a, const LinearEmbedding& b) {
  return a.source_dimension_ == b.source_dimension_ &&
         a.target_dimension_ == b.target_dimension_ && a.images_ == b.images_;
}

std::string LinearEmbedding::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) os << ", ";
    os << GF2Vector(target_dimension_, images_[k]).to_string();
  }
  os << ')';
  return os.str();
}

LinearEmbedding tau(const SymplecticSpace& target, int i) {
  const int D = target.dimension();
  if (D < 2) throw DimensionError("tau needs D >= 2");
  if (i < 1 || i > D + 1) throw std::out_of_range("tau index must lie in [1, D+1]");
  if (D == 2) return LinearEmbedding(0, 2, {0});

  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(D - 1));
  const auto e = [&](int j) { return target.circular_bits(j); };
  if (i == 1) {
    for (int j = 3; j <= D; ++j) images.push_back(e(j));
    images.push_back(e(D + 1) ^ e(1) ^ e(2));
  } else if (i == D + 1) {
    for (int j = 2; j <= D - 1; ++j) images.push_back(e(j));
    images.push_back(e(D) ^ e(D + 1) ^ e(1));
  } else {
    for (int j = 1; j <= i - 2; ++j) images.push_back(e(j));
    images.push_back(e(i - 1) ^ e(i) ^ e(i + 1));
    for (int j = i + 2; j <= D + 1; ++j) images.push_back(e(j));
  }
  return LinearEmbedding(D - 2, D, std::move(images));
}

LinearEmbedding tau_prime(const SymplecticSpace& space, int i) {
  const int D = space.dimension();
  if (D < 4) throw DimensionError("tau' needs D >= 4");
  if (i < 1 || i > D - 1) throw std::out_of_range("tau' index must lie in [1, D-1]");
  return tau(SymplecticSpace::make(D - 2), i);
}

bool check_complement(const SymplecticSpace& space, int i) {
  const LinearEmbedding t = tau(space, i);
  const Word ei = space.circular_bits(i);
  const Subspace image = Subspace::span(space.dimension(), std::span<const Word>(
      t.circular_images().data(), static_cast<std::size_t>(t.source_dimension())));
  if (image.contains(ei)) return false;
  const Subspace perp = orthogonal_complement(space, Subspace::span(space.dimension(), {ei}));
  return image.with(ei) == perp;
}

Report verify_composition_identity(int dimension) {
  const auto V = SymplecticSpace::make(dimension);
  if (dimension < 4) throw DimensionError("the composition identity needs D >= 4");
  const auto Vp = SymplecticSpace::make(dimension - 2);
  Report report("composition-identity D=" + std::to_string(dimension));
  const Family inner = build_family(dimension - 4);

  const auto subspace_identity = [&](int i, int j) {
    std::size_t bad = 0;
    for (const auto& entry : inner.entries()) {
      const Subspace& E2 = entry.space;
      const Subspace left = tau(V, dimension + 1)
                                .apply(tau_prime(V, i).apply(E2).with(Vp.circular_bits(i)))
                                .with(V.circular_bits(dimension + 1));
      const Subspace right = tau(V, j)
                                 .apply(tau_prime(V, dimension - 1).apply(E2).with(Vp.circular_bits(dimension - 1)))
                                 .with(V.circular_bits(j));
      bad += left != right;
    }
    return bad;
  };
  const auto maps_agree = [&](int i, int j) {
    return tau(V, dimension + 1).compose(tau_prime(V, i)) == tau(V, j).compose(tau_prime(V, dimension - 1));
  };

  // The map identity holds with j = i + 1 throughout, and also with j = 1
  // when i = 1. The subspace identity needs j = i + 1: for i = 1, j = 1 the
  // lines F2 tau_{D+1}(e'_1) + F2 e_{D+1} and F2 tau_1(e'_{D-1}) + F2 e_1 differ.
  for (int i = 1; i <= dimension - 2; ++i) {
    const int j = i + 1;
    report.add("maps i=" + std::to_string(i), maps_agree(i, j), "j = " + std::to_string(j));
    const std::size_t bad = subspace_identity(i, j);
    report.add("subspaces i=" + std::to_string(i), bad == 0,
               std::to_string(bad) + " of " + std::to_string(inner.size()) + " members of F(V'') differ");
  }
  report.add("maps i=1 j=1", maps_agree(1, 1));
  report.add("subspaces i=1 j=1 differ", subspace_identity(1, 1) == inner.size(),
             "the j = 1 form fails for every member");
  return report;
}

LinearEmbedding generic_tau(const SymplecticSpace& target, int source_vertex, int target_vertex,
                            Orientation orientation) {
  const int D = target.dimension();
  if (D < 4) throw DimensionError("generic tau needs D >= 4");
  if (source_vertex < 1 || source_vertex > D - 1 || target_vertex < 1 || target_vertex > D + 1) {
    throw std::out_of_range("vertex outside the circular basis");
  }
  std::vector<Word> images(static_cast<std::size_t>(D - 1), 0);
  images[static_cast<std::size_t>(source_vertex - 1)] =
      circ(target, target_vertex - 1) ^ circ(target, target_vertex) ^ circ(target, target_vertex + 1);
  for (int k = 1; k <= D - 2; ++k) {
    const int source = (source_vertex - 1 + k) % (D - 1) + 1;
    const int image = orientation == Orientation::kForward ? target_vertex + 1 + k
                                                           : target_vertex - 1 - k;
    images[static_cast<std::size_t>(source - 1)] = circ(target, image);
  }
  return LinearEmbedding(D - 2, D, std::move(images));
}

}  // namespace trifourier
