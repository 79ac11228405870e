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

#ifndef SEGEVAL_WINNER_H_
#define SEGEVAL_WINNER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "segeval/ter.h"

// Per-sentence TER comparison of two systems against one reference set.
namespace segeval {

enum class Winner { kSystemA, kSystemB, kTie };

// Lower sentence TER wins. Scores are compared as exact rationals
// (edits_a * ref_b vs edits_b * ref_a), so equal ratios always tie.
Winner CompareSentenceTer(const TerAlignment& a, const TerAlignment& b);

struct WinnerGroup {
  int64_t count = 0;
  // Mean of the sentence-level TER scores inside the group; empty group ->
  // nullopt.
  std::optional<double> mean_ter_a;
  std::optional<double> mean_ter_b;
  // Counters pooled over the group's sentences (edits / reference words).
  TerAlignment pooled_a;
  TerAlignment pooled_b;
};

struct WinnerReport {
  WinnerGroup a_wins;
  WinnerGroup b_wins;
  WinnerGroup ties;
  TerAlignment total_a;  // corpus TER of system A
  TerAlignment total_b;
  double win_percent_a = 0.0;
  double win_percent_b = 0.0;
  double tie_percent = 0.0;

  std::vector<Winner> winners;
  std::vector<TerAlignment> sentences_a;
  std::vector<TerAlignment> sentences_b;

  const WinnerGroup& group(Winner w) const;
};

// Builds the report from already computed sentence alignments. Throws
// Mismatch on differing sizes and InvalidArgument on empty input.
WinnerReport SummarizeWinners(std::vector<TerAlignment> sentences_a,
                              std::vector<TerAlignment> sentences_b);

WinnerReport TerWinnerAnalysis(const std::vector<TokenizedLine>& hyps_a,
                               const std::vector<TokenizedLine>& hyps_b,
                               const std::vector<TokenizedLine>& refs,
                               const TerOptions& options = {},
                               int threads = 1);

}  // namespace segeval

#endif  // SEGEVAL_WINNER_H_
