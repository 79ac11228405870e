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

#ifndef SEGEVAL_BLEU_H_
#define SEGEVAL_BLEU_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "segeval/preprocess.h"

// Single-reference corpus BLEU with the multi-bleu conventions: clipped
// n-gram matches and n-gram totals are summed over the corpus per order, the
// brevity penalty uses total lengths, and the score is the geometric mean of
// orders 1-4. No smoothing.
namespace segeval {

inline constexpr int kBleuMaxOrder = 4;

// Integer sufficient statistics. Summation is associative, so any sharding
// of the corpus yields identical totals.
struct BleuStats {
  std::array<int64_t, kBleuMaxOrder> matches{};
  std::array<int64_t, kBleuMaxOrder> totals{};
  int64_t hyp_length = 0;
  int64_t ref_length = 0;

  BleuStats& operator+=(const BleuStats& other);
  friend bool operator==(const BleuStats&, const BleuStats&) = default;
};

BleuStats SentenceBleuStats(std::span<const std::string> hyp,
                            std::span<const std::string> ref,
                            bool lowercase = false);

struct BleuReport {
  double score = 0.0;  // 0..100
  std::array<double, kBleuMaxOrder> precisions{};
  double brevity_penalty = 1.0;
  double length_ratio = 0.0;  // hyp_length / ref_length
  BleuStats stats;
  // Set when some order has no matches or no n-grams at all; the score is
  // then reported as 0.
  bool degenerate = false;
};

BleuReport BleuFromStats(const BleuStats& stats);

// Throws Mismatch when the corpora differ in size, InvalidArgument when empty.
BleuReport CorpusBleu(const std::vector<TokenizedLine>& hyps,
                      const std::vector<TokenizedLine>& refs,
                      bool lowercase = false, int threads = 1);

// "BLEU = 77.88, 100.0/100.0/100.0/100.0 (BP=0.779, ratio=0.800, hyp_len=4,
// ref_len=5)"
std::string FormatBleuSummary(const BleuReport& report);

}  // namespace segeval

#endif  // SEGEVAL_BLEU_H_
