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
#include "tdprep/model.hpp"
#include "tdprep/tableau.hpp"

namespace {

using namespace tdprep;

TdModel toric(int l) {
    return build_model(make_lattice(LatticeSpec::periodic({l, l})),
                       TdParams{0, 1, 2, 2});
}

void bm_run_sweep(benchmark::State& state) {
    TdModel model = toric(static_cast<int>(state.range(0)));
    Circuit circuit = synth_uc(model).circuit;
    for (auto _ : state) {
        Tableau t = Tableau::zero_state(model.n_qubits());
        t.run(circuit);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(bm_run_sweep)->Arg(8)->Arg(16)->Arg(24);

void bm_canonical(benchmark::State& state) {
    TdModel model = toric(static_cast<int>(state.range(0)));
    Tableau t = Tableau::zero_state(model.n_qubits());
    t.run(synth_uc(model).circuit);
    for (auto _ : state) {
        benchmark::DoNotOptimize(t.canonical());
    }
}
BENCHMARK(bm_canonical)->Arg(8)->Arg(16);

void bm_check_code_state(benchmark::State& state) {
    TdModel model = toric(static_cast<int>(state.range(0)));
    Tableau t = Tableau::zero_state(model.n_qubits());
    t.run(synth_uc(model).circuit);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_code_state(t, model));
    }
}
BENCHMARK(bm_check_code_state)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
