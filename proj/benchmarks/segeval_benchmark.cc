// Copyright 2026 The segeval Authors
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
#include <string>
#include <vector>

#include "segeval/bleu.h"
#include "segeval/preprocess.h"
#include "segeval/segment.h"
#include "segeval/ter.h"

namespace segeval {
namespace {

// Zipf-ish synthetic corpus over a fixed word list.
std::vector<TokenizedLine> Corpus(size_t lines, unsigned seed) {
  static const std::vector<std::string> words = {
      "the", "of", "and", "to", "a", "in", "is", "that", "for", "it",
      "translation", "speech", "character", "segmentation", "lower",
      "lowest", "newest", "widest", "encoder", "decoder", "attention"};
  std::mt19937_64 rng(seed);
  std::vector<double> weights;
  for (size_t i = 0; i < words.size(); ++i) weights.push_back(1.0 / (i + 1));
  std::discrete_distribution<size_t> pick(weights.begin(), weights.end());
  std::uniform_int_distribution<size_t> length(5, 30);
  std::vector<TokenizedLine> corpus(lines);
  for (TokenizedLine& line : corpus) {
    const size_t n = length(rng);
    for (size_t i = 0; i < n; ++i) line.tokens.push_back(words[pick(rng)]);
  }
  return corpus;
}

void BM_LearnBpe(benchmark::State& state) {
  const auto corpus = Corpus(2000, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        LearnBpe(corpus, static_cast<int>(state.range(0)), 2));
  }
}
BENCHMARK(BM_LearnBpe)->Arg(50)->Arg(500);

void BM_ApplyBpe(benchmark::State& state) {
  const auto corpus = Corpus(2000, 2);
  const MergeRuleTable table = LearnBpe(corpus, 200, 2);
  for (auto _ : state) {
    for (const TokenizedLine& line : corpus) {
      benchmark::DoNotOptimize(ApplyBpe(table, line));
    }
  }
  state.SetItemsProcessed(state.iterations() * corpus.size());
}
BENCHMARK(BM_ApplyBpe);

void BM_SentenceTer(benchmark::State& state) {
  const auto hyps = Corpus(200, 3);
  const auto refs = Corpus(200, 4);
  for (auto _ : state) {
    for (size_t i = 0; i < hyps.size(); ++i) {
      benchmark::DoNotOptimize(SentenceTer(hyps[i].tokens, refs[i].tokens));
    }
  }
  state.SetItemsProcessed(state.iterations() * hyps.size());
}
BENCHMARK(BM_SentenceTer);

void BM_CorpusBleu(benchmark::State& state) {
  const auto hyps = Corpus(5000, 5);
  const auto refs = Corpus(5000, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CorpusBleu(hyps, refs));
  }
  state.SetItemsProcessed(state.iterations() * hyps.size());
}
BENCHMARK(BM_CorpusBleu);

}  // namespace
}  // namespace segeval

BENCHMARK_MAIN();
