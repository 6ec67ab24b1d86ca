// Copyright 2026 The acalg Authors. All Rights Reserved.
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

#include <random>

#include "acalg/homology.hpp"
#include "acalg/mc.hpp"
#include "acalg/representation.hpp"

namespace {

using namespace acalg;

Word random_word(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> letter(0, 3);
  Word w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(kGenerators[letter(rng)]);
  return w;
}

void BM_NormalForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(rng, state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(words[i++ % words.size()]));
}
BENCHMARK(BM_NormalForm)->DenseRange(4, 12, 4);

void BM_RewriteStrategy(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Word w = random_word(rng, 8);
  const auto strategy = state.range(0) == 0 ? RewriteStrategy::LeftmostInnermost
                                            : RewriteStrategy::RightmostOutermost;
  for (auto _ : state) benchmark::DoNotOptimize(rewrite(w, strategy));
}
BENCHMARK(BM_RewriteStrategy)->Arg(0)->Arg(1);

void BM_BasisA(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(basis_A(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BasisA)->Arg(8)->Arg(12);

void BM_ProductDegreeFour(benchmark::State& state) {
  const auto basis = basis_A(4);
  const AlgebraElement a = AlgebraElement::monomial(basis[basis.size() / 3]);
  const AlgebraElement b = AlgebraElement::monomial(basis.back());
  for (auto _ : state) benchmark::DoNotOptimize(product(b, a));
}
BENCHMARK(BM_ProductDegreeFour);

void BM_AdMatrix(benchmark::State& state) {
  const LieElement d = LieElement::certify(total_differential());
  dim_g(static_cast<int>(state.range(0)) + 1);  // warm the basis cache
  for (auto _ : state) benchmark::DoNotOptimize(ad_matrix(d, static_cast<int>(state.range(0)), Carrier::g()));
}
BENCHMARK(BM_AdMatrix)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state) {
  const ExactMatrix m = ad_matrix(LieElement::generator(Generator::MuBar), 7, Carrier::B()).matrix;
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) == 0 ? rank_bareiss(m) : rank_column_echelon(m));
  }
}
BENCHMARK(BM_Rank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CohomologyTable(benchmark::State& state) {
  const LieElement d = LieElement::certify(total_differential());
  for (auto _ : state) {
    benchmark::DoNotOptimize(cohomology_table(d, static_cast<int>(state.range(0)), Carrier::g()));
  }
}
BENCHMARK(BM_CohomologyTable)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_LesCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(les_check(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LesCheck)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PhiCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(phi_conjugation_check(2, Scalar::i(), 5));
}
BENCHMARK(BM_PhiCheck)->Unit(benchmark::kMillisecond);

void BM_VerifyExampleRep(benchmark::State& state) {
  const BigradedRep r = build_example_rep(Scalar::rational(1, 3), 2, Scalar::i());
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(r));
}
BENCHMARK(BM_VerifyExampleRep);

}  // namespace

BENCHMARK_MAIN();
