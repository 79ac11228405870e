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

#ifndef SEGEVAL_TESTS_SUPPORT_ORACLES_H_
#define SEGEVAL_TESTS_SUPPORT_ORACLES_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

// Slow, obviously-correct reference implementations. They share no code with
// the library beyond the standard library.
namespace segeval::oracle {

using Pair = std::pair<std::string, std::string>;

// Recounts every adjacent pair from scratch each round.
std::vector<Pair> BruteForceBpe(const std::map<std::string, int64_t>& words,
                                int n_merges, int min_frequency);

// Splits UTF-8 into code point substrings by lead-byte inspection.
std::vector<std::string> Utf8Chars(const std::string& word);

struct NgramCounts {
  std::array<int64_t, 4> matches{};
  std::array<int64_t, 4> totals{};
  int64_t hyp_length = 0;
  int64_t ref_length = 0;
};

// Enumerates n-grams as joined strings and clips with per-gram minima.
NgramCounts BruteForceNgrams(const std::vector<std::string>& hyp,
                             const std::vector<std::string>& ref);

// 100 * BP * exp(mean log p) computed from raw counts; 0 when any order has
// no matches or no n-grams.
double ClosedFormBleu(const NgramCounts& counts);

// Full-table Levenshtein distance over words.
int64_t Levenshtein(const std::vector<int>& a, const std::vector<int>& b);

struct OracleShift {
  size_t start = 0;
  size_t length = 0;
  size_t destination = 0;
  int64_t reduction = 0;
};

std::vector<int> MoveSpan(const std::vector<int>& seq, size_t start,
                          size_t length, size_t destination);

// Tries every admissible single shift (span matches some reference span,
// length <= max_span, |destination - start| <= max_distance) and keeps the
// largest strict reduction, scanning start, then length, then destination.
// Returns false when no shift reduces the distance.
bool BestSingleShift(const std::vector<int>& hyp, const std::vector<int>& ref,
                     int max_span, int max_distance, OracleShift& best);

}  // namespace segeval::oracle

#endif  // SEGEVAL_TESTS_SUPPORT_ORACLES_H_
