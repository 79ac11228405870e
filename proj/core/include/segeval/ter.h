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

#ifndef SEGEVAL_TER_H_
#define SEGEVAL_TER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "segeval/preprocess.h"

// Translation error rate with greedy block shifts. Case-sensitive.
//
// Edit counters follow the hypothesis-to-reference convention: an insertion
// is a hypothesis word with no reference counterpart, a deletion is a
// reference word missing from the hypothesis.
namespace segeval {

struct TerOptions {
  int max_shift_span = 10;
  int max_shift_distance = 50;
};

struct TerAlignment {
  int64_t insertions = 0;
  int64_t deletions = 0;
  int64_t substitutions = 0;
  int64_t shifts = 0;
  int64_t ref_length = 0;

  int64_t edits() const {
    return insertions + deletions + substitutions + shifts;
  }
  // 100 * edits / ref_length.
  double score() const;

  TerAlignment& operator+=(const TerAlignment& other);
  friend bool operator==(const TerAlignment&, const TerAlignment&) = default;
};

// Moves hyp[start, start + length) so that it begins at `destination` in the
// sequence that remains once the span is removed.
struct Shift {
  size_t start = 0;
  size_t length = 0;
  size_t destination = 0;

  friend bool operator==(const Shift&, const Shift&) = default;
};

std::vector<std::string> ApplyShift(std::span<const std::string> hyp,
                                    const Shift& shift);

// Unit-cost word-level Levenshtein distance.
int64_t WordEditDistance(std::span<const std::string> hyp,
                         std::span<const std::string> ref);

struct ShiftCandidate {
  Shift shift;
  int64_t reduction = 0;  // edit distance before minus after
};

// One greedy step: the admissible shift with the largest edit-distance
// reduction, or nullopt when none reduces it. A shift is admissible when its
// span is at most `max_shift_span` words, equals some reference span, and
// moves by at most `max_shift_distance` positions. Ties prefer the smallest
// start, then the shortest span, then the leftmost destination.
std::optional<ShiftCandidate> FindBestShift(std::span<const std::string> hyp,
                                            std::span<const std::string> ref,
                                            const TerOptions& options = {});

// Throws InvalidArgument on an empty reference.
TerAlignment SentenceTer(std::span<const std::string> hyp,
                         std::span<const std::string> ref,
                         const TerOptions& options = {});

// Counters summed over sentences, so the score is pooled over the corpus.
TerAlignment CorpusTer(const std::vector<TokenizedLine>& hyps,
                       const std::vector<TokenizedLine>& refs,
                       const TerOptions& options = {}, int threads = 1);

std::vector<TerAlignment> SentenceTers(const std::vector<TokenizedLine>& hyps,
                                       const std::vector<TokenizedLine>& refs,
                                       const TerOptions& options = {},
                                       int threads = 1);

std::string FormatTerSummary(const TerAlignment& ter);

}  // namespace segeval

#endif  // SEGEVAL_TER_H_
