// Copyright 2026 The tdprep Authors
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

#include "tdprep/circuit.hpp"
#include "tdprep/css.hpp"
#include "tdprep/model.hpp"

namespace {

using namespace tdprep;

void bm_build_model(benchmark::State& state) {
    int l = static_cast<int>(state.range(0));
    for (auto _ : state) {
        TdModel model = build_model(make_lattice(LatticeSpec::periodic({l, l, l})),
                                    TdParams{0, 1, 2, 3});
        benchmark::DoNotOptimize(model);
    }
}
BENCHMARK(bm_build_model)->Arg(3)->Arg(5);

void bm_synth_uc(benchmark::State& state) {
    int l = static_cast<int>(state.range(0));
    TdModel model = build_model(make_lattice(LatticeSpec::periodic({l, l, l})),
                                TdParams{0, 1, 2, 3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(synth_uc(model));
    }
}
BENCHMARK(bm_synth_uc)->Arg(3)->Arg(5);

void bm_seed_plan(benchmark::State& state) {
    int l = static_cast<int>(state.range(0));
    TdModel model = build_model(make_lattice(LatticeSpec::periodic({l, l, l})),
                                TdParams{0, 1, 2, 3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_seed_plan(model));
    }
}
BENCHMARK(bm_seed_plan)->Arg(3)->Arg(5);

void bm_find_seeds(benchmark::State& state) {
    int l = static_cast<int>(state.range(0));
    TdModel model = build_model(make_lattice(LatticeSpec::periodic({l, l})),
                                TdParams{0, 1, 2, 2});
    UcSynthesis uc = synth_uc(model);
    TdCss css = from_td(model, uc);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_seeds(css.code, css.plan));
    }
}
BENCHMARK(bm_find_seeds)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
