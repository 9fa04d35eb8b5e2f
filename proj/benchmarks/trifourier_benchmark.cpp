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
#include <benchmark/benchmark.h>

#include <vector>

#include "trifourier/cyclotomic.hpp"
#include "trifourier/family.hpp"
#include "trifourier/fourier.hpp"
#include "trifourier/new_basis.hpp"
#include "trifourier/nonabelian.hpp"

namespace trifourier {
namespace {

void BM_BuildFamily(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_family(d));
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << d));
}
BENCHMARK(BM_BuildFamily)->DenseRange(2, 12, 2)->Unit(benchmark::kMicrosecond);

void BM_BuildFamilyUcb(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_family_ucb(d));
}
BENCHMARK(BM_BuildFamilyUcb)->DenseRange(2, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_ScaledPhi(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto v = SymplecticSpace::make(d);
  std::vector<std::int64_t> f(v.cardinality());
  for (std::size_t x = 0; x < f.size(); ++x) f[x] = static_cast<std::int64_t>(x % 7) - 3;
  for (auto _ : state) benchmark::DoNotOptimize(scaled_phi(v, f));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.size()));
}
BENCHMARK(BM_ScaledPhi)->DenseRange(2, 14, 4)->Unit(benchmark::kMicrosecond);

void BM_ChangeOfBasis(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Family f = build_family(d);
  for (auto _ : state) benchmark::DoNotOptimize(change_of_basis(f));
}
BENCHMARK(BM_ChangeOfBasis)->DenseRange(2, 10, 2)->Unit(benchmark::kMillisecond);

void BM_NonabelianFt(benchmark::State& state) {
  const auto name = static_cast<GroupName>(state.range(0));
  const NonabelianGroup group = NonabelianGroup::make(name);
  for (auto _ : state) benchmark::DoNotOptimize(nonabelian_ft(group));
  state.SetLabel(group_string(name));
}
BENCHMARK(BM_NonabelianFt)
    ->Arg(static_cast<int>(GroupName::kS3))
    ->Arg(static_cast<int>(GroupName::kS4))
    ->Arg(static_cast<int>(GroupName::kS5))
    ->Unit(benchmark::kMillisecond);

void BM_VerifyS3Basis(benchmark::State& state) {
  const NonabelianGroup group = NonabelianGroup::make(GroupName::kS3);
  const CycMatrix ft = nonabelian_ft(group);
  const NewBasis basis = s3_new_basis(Variant::kG2);
  const PiecePartition pieces = piece_partition(GroupName::kS3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_triangular(group, ft, basis, pieces));
}
BENCHMARK(BM_VerifyS3Basis)->Unit(benchmark::kMicrosecond);

void BM_CycNumInverse(benchmark::State& state) {
  const CycNum x = CycNum(3) + CycNum::root_of_unity(7) - CycNum(mpq_class(1, 2)) * CycNum::root_of_unity(22);
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_CycNumInverse)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace trifourier

BENCHMARK_MAIN();
