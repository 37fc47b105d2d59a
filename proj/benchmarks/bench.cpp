// Copyright 2026 The quadfillet Authors.
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

#include <benchmark/benchmark.h>

#include <random>

#include "quadfillet/eigen.hpp"
#include "quadfillet/fillet.hpp"
#include "quadfillet/mesh.hpp"
#include "quadfillet/solid.hpp"

namespace qf = quadfillet;
using qf::Vec3;

namespace {

qf::Lattice perpendicular(double beta) {
  qf::Lattice l;
  l.hubs = {{"h0", {0, 0, 0}, 1}, {"h1", {4, 0, 0}, 1}, {"h2", {0, 4, 0}, 1}};
  l.beams = {{"b0", "h0", "h1", 4}, {"b1", "h0", "h2", 4}};
  l.fillets = {{"h0", "b0", "b1", beta}};
  return l;
}

void BM_JacobiEigen3(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<qf::Mat3> inputs(256);
  for (auto& m : inputs)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) m.m[i][j] = m.m[j][i] = u(rng);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(qf::jacobi_eigen3(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_JacobiEigen3);

void BM_BuildFillet(benchmark::State& state) {
  const auto l = perpendicular(1.0);
  const auto s1 = qf::stub_view(l, "h0", "b0");
  const auto s2 = qf::stub_view(l, "h0", "b1");
  for (auto _ : state) benchmark::DoNotOptimize(qf::build_fillet(s1, s2, 1.0));
}
BENCHMARK(BM_BuildFillet);

void BM_FieldValue(benchmark::State& state) {
  const auto a = qf::build_assembly(perpendicular(1.0));
  const qf::Box box = qf::auto_bounds(a);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Vec3> pts(1024);
  const Vec3 d = box.size();
  for (auto& p : pts) p = box.lo + Vec3{u(rng) * d.x, u(rng) * d.y, u(rng) * d.z};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(qf::field_value(a, pts[i++ % pts.size()]));
}
BENCHMARK(BM_FieldValue);

void BM_MarchingCubes(benchmark::State& state) {
  const auto a = qf::build_assembly(perpendicular(1.0));
  const qf::Box box = qf::auto_bounds(a);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qf::marching_cubes(a, box, {n, n, n}));
}
BENCHMARK(BM_MarchingCubes)->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
