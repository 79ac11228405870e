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

#include "segeval/winner.h"

#include <string>

#include "segeval/error.h"

namespace segeval {

Winner CompareSentenceTer(const TerAlignment& a, const TerAlignment& b) {
  const __int128 lhs = static_cast<__int128>(a.edits()) * b.ref_length;
  const __int128 rhs = static_cast<__int128>(b.edits()) * a.ref_length;
  if (lhs < rhs) return Winner::kSystemA;
  if (rhs < lhs) return Winner::kSystemB;
  return Winner::kTie;
}

const WinnerGroup& WinnerReport::group(Winner w) const {
  switch (w) {
    case Winner::kSystemA:
      return a_wins;
    case Winner::kSystemB:
      return b_wins;
    case Winner::kTie:
      break;
  }
  return ties;
}

WinnerReport SummarizeWinners(std::vector<TerAlignment> sentences_a,
                              std::vector<TerAlignment> sentences_b) {
  if (sentences_a.size() != sentences_b.size()) {
    throw Mismatch("system A has " + std::to_string(sentences_a.size()) +
                   " sentences but system B has " +
                   std::to_string(sentences_b.size()));
  }
  if (sentences_a.empty()) {
    throw InvalidArgument("winner analysis needs a non-empty corpus");
  }

  WinnerReport report;
  struct Sums {
    double a = 0.0;
    double b = 0.0;
  };
  Sums sum_a_wins, sum_b_wins, sum_ties;
  report.winners.reserve(sentences_a.size());
  for (size_t i = 0; i < sentences_a.size(); ++i) {
    const TerAlignment& a = sentences_a[i];
    const TerAlignment& b = sentences_b[i];
    const Winner w = CompareSentenceTer(a, b);
    report.winners.push_back(w);
    WinnerGroup* group = w == Winner::kSystemA   ? &report.a_wins
                         : w == Winner::kSystemB ? &report.b_wins
                                                 : &report.ties;
    Sums* sums = w == Winner::kSystemA   ? &sum_a_wins
                 : w == Winner::kSystemB ? &sum_b_wins
                                         : &sum_ties;
    ++group->count;
    group->pooled_a += a;
    group->pooled_b += b;
    sums->a += a.score();
    sums->b += b.score();
    report.total_a += a;
    report.total_b += b;
  }

  auto finish = [](WinnerGroup& group, const Sums& sums) {
    if (group.count == 0) return;
    group.mean_ter_a = sums.a / static_cast<double>(group.count);
    group.mean_ter_b = sums.b / static_cast<double>(group.count);
  };
  finish(report.a_wins, sum_a_wins);
  finish(report.b_wins, sum_b_wins);
  finish(report.ties, sum_ties);

  const double n = static_cast<double>(sentences_a.size());
  report.win_percent_a = 100.0 * static_cast<double>(report.a_wins.count) / n;
  report.win_percent_b = 100.0 * static_cast<double>(report.b_wins.count) / n;
  report.tie_percent = 100.0 * static_cast<double>(report.ties.count) / n;
  report.sentences_a = std::move(sentences_a);
  report.sentences_b = std::move(sentences_b);
  return report;
}

WinnerReport TerWinnerAnalysis(const std::vector<TokenizedLine>& hyps_a,
                               const std::vector<TokenizedLine>& hyps_b,
                               const std::vector<TokenizedLine>& refs,
                               const TerOptions& options, int threads) {
  if (hyps_a.size() != refs.size() || hyps_b.size() != refs.size()) {
    throw Mismatch("corpus sizes differ: system A " +
                   std::to_string(hyps_a.size()) + ", system B " +
                   std::to_string(hyps_b.size()) + ", reference " +
                   std::to_string(refs.size()));
  }
  return SummarizeWinners(SentenceTers(hyps_a, refs, options, threads),
                          SentenceTers(hyps_b, refs, options, threads));
}

}  // namespace segeval
