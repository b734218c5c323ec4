// Copyright 2026 The hybridstab Authors
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

#include "hybridstab/code.h"
#include "hybridstab/correctability.h"
#include "hybridstab/distance.h"
#include "hybridstab/pauli.h"
#include "hybridstab/subgroup.h"

namespace hybridstab {
namespace {

PauliOperator random_operator(std::mt19937_64& rng, int d, int n) {
    std::uniform_int_distribution<std::uint32_t> digit(0, static_cast<std::uint32_t>(d - 1));
    std::vector<std::uint32_t> x(n), z(n);
    for (int j = 0; j < n; ++j) {
        x[j] = digit(rng);
        z[j] = digit(rng);
    }
    return PauliOperator(d, 0, std::move(x), std::move(z));
}

void BM_Multiply(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const int n = static_cast<int>(state.range(0));
    const auto g = random_operator(rng, 2, n), h = random_operator(rng, 2, n);
    for (auto _ : state) benchmark::DoNotOptimize(multiply(g, h));
}
BENCHMARK(BM_Multiply)->Arg(16)->Arg(64)->Arg(256);

void BM_StabilizerMembership(benchmark::State& state) {
    const auto code = build_bacon_shor(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(2);
    std::vector<PauliOperator> queries;
    for (int i = 0; i < 64; ++i) queries.push_back(random_operator(rng, 2, code.num_sites()));
    queries.push_back(code.stabilizer_generators().front());
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(member(queries[i++ % queries.size()], code.gauge_group()));
}
BENCHMARK(BM_StabilizerMembership)->Arg(4)->Arg(8);

void BM_CheckErrors(benchmark::State& state) {
    const auto code = hybridize_css(build_bacon_shor(8), LinearCode::hamming743(), LinearCode::hamming743());
    std::vector<PauliOperator> errors{PauliOperator(2, 64)};
    for (int site = 0; site < 8; ++site) errors.push_back(PauliOperator::single(2, 64, site, 1, 0));
    for (auto _ : state) benchmark::DoNotOptimize(check_errors(code, errors));
}
BENCHMARK(BM_CheckErrors)->Unit(benchmark::kMillisecond);

void BM_DistanceSearch(benchmark::State& state) {
    const int ell = static_cast<int>(state.range(0));
    const auto code = hybridize_css(build_bacon_shor(ell), LinearCode::repetition(ell - 1), LinearCode::repetition(ell - 1));
    for (auto _ : state) benchmark::DoNotOptimize(exact_distance(code, DistanceOptions{ell, 1}));
}
BENCHMARK(BM_DistanceSearch)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hybridstab

BENCHMARK_MAIN();
