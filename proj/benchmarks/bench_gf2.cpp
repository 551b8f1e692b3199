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

#include <random>

#include "tdprep/gf2.hpp"

namespace {

tdprep::gf2::BitMat random_matrix(std::size_t rows, std::size_t cols,
                                  uint64_t seed) {
    std::mt19937_64 rng(seed);
    tdprep::gf2::BitMat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t w = 0; w < m.words_per_row(); ++w) {
            m.row_ptr(r)[w] = rng();
        }
        // Mask the tail so stray bits never leak past the column count.
        if (cols % 64) {
            m.row_ptr(r)[m.words_per_row() - 1] &=
                (uint64_t{1} << (cols % 64)) - 1;
        }
    }
    return m;
}

void bm_rank(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    tdprep::gf2::BitMat m = random_matrix(n, n, 0x5eed);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tdprep::gf2::rank(m));
    }
}
BENCHMARK(bm_rank)->Arg(256)->Arg(512)->Arg(1024);

void bm_rref(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    tdprep::gf2::BitMat m = random_matrix(n, n, 0xfeed);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tdprep::gf2::rref(m));
    }
}
BENCHMARK(bm_rref)->Arg(256)->Arg(512);

void bm_solve_membership(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    tdprep::gf2::BitMat m = random_matrix(n, 2 * n, 0xabcd);
    tdprep::gf2::BitVec v = m.row(n / 2);
    v.xor_in(m.row(n / 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tdprep::gf2::solve_membership(m, v));
    }
}
BENCHMARK(bm_solve_membership)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
