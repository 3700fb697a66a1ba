// Copyright 2026 The cliffy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "cliffy/braided.hpp"
#include "cliffy/catalog.hpp"
#include "cliffy/relative.hpp"
#include "cliffy/rota_baxter.hpp"

namespace {

  using namespace cliffy;

  // Catalog keys by argument index so the report names the fixture.
  char const* const kKeys[] = {"z8", "klein4", "s3", "z3_0", "diamond"};

  void BM_EnumerateRB(benchmark::State& state) {
    CliffordTable const c = catalog_clifford(kKeys[state.range(0)]);
    Budget              b;
    b.threads = 1;
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_rb(c, Weight::plus, false, b));
    }
    state.SetLabel(c.name());
  }
  BENCHMARK(BM_EnumerateRB)->DenseRange(0, 4);

  void BM_EnumeratePost(benchmark::State& state) {
    CliffordTable const c = catalog_clifford(kKeys[state.range(0) + 3]);
    Budget              b;
    b.threads = 1;
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_post(c, false, b));
    }
    state.SetLabel(c.name());
  }
  BENCHMARK(BM_EnumeratePost)->DenseRange(0, 1);

  void BM_BraidCheck(benchmark::State& state) {
    CliffordTable const c = catalog_clifford("z8");
    YBEMap const        r = ybe_from_brace(circ_r(enumerate_rb(c, Weight::plus).back()).brace);
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_yang_baxter(r));
    }
  }
  BENCHMARK(BM_BraidCheck);

  void BM_GraphCharacterization(benchmark::State& state) {
    CliffordTable const c   = catalog_clifford("s3");
    Action const        phi = Action::conjugation(c);
    ElementMap const    r   = enumerate_relative(phi).back().R();
    for (auto _ : state) {
      benchmark::DoNotOptimize(graph_characterization(phi, r));
    }
  }
  BENCHMARK(BM_GraphCharacterization);

  void BM_PostToBraided(benchmark::State& state) {
    PostTable const p = enumerate_post(catalog_clifford("klein4"), true).back();
    for (auto _ : state) {
      benchmark::DoNotOptimize(post_to_braided(p));
    }
  }
  BENCHMARK(BM_PostToBraided);

}  // namespace

BENCHMARK_MAIN();
