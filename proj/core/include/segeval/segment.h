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

#ifndef SEGEVAL_SEGMENT_H_
#define SEGEVAL_SEGMENT_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "segeval/preprocess.h"

// Character-level and BPE target segmentation.
//
// A word w1..wk enters BPE as the symbols (w1, ..., wk-1, wk</w>). Encoded
// subwords that do not end a word carry the "@@" suffix and the end-of-word
// sentinel is dropped from the final piece. The character scheme emits one
// token per code point and the standalone token "▁" for every space.
namespace segeval {

inline constexpr std::string_view kEndOfWord = "</w>";
inline constexpr std::string_view kContinuation = "@@";
inline constexpr std::string_view kSpaceToken = "▁";

inline constexpr int kDefaultMinFrequency = 2;
inline constexpr int kDefaultMerges = 8000;
inline constexpr int kDefaultJointMerges = 20000;

struct MergeRule {
  std::string left;
  std::string right;
  int rank = 0;

  friend bool operator==(const MergeRule&, const MergeRule&) = default;
};

// Rules ordered by rank; ranks are 0..size-1.
class MergeRuleTable {
 public:
  MergeRuleTable() = default;
  MergeRuleTable(std::vector<MergeRule> rules, int n_merges, int min_frequency);

  const std::vector<MergeRule>& rules() const { return rules_; }
  size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  int n_merges() const { return n_merges_; }
  int min_frequency() const { return min_frequency_; }

  // Rank of the (left, right) merge, or -1.
  int Rank(std::string_view left, std::string_view right) const;

  // First `count` rules as a new table.
  MergeRuleTable Prefix(size_t count) const;

 private:
  static std::string Key(std::string_view left, std::string_view right);

  std::vector<MergeRule> rules_;
  int n_merges_ = 0;
  int min_frequency_ = kDefaultMinFrequency;
  std::unordered_map<std::string, int> ranks_;
};

enum class Scheme { kChar, kBpe };

std::string_view SchemeName(Scheme scheme);
Scheme ParseScheme(std::string_view name);

struct SegmentedSentence {
  std::vector<std::string> tokens;
  Scheme scheme = Scheme::kBpe;

  friend bool operator==(const SegmentedSentence&,
                         const SegmentedSentence&) = default;
};

// Word type -> occurrence count. Ordered so learning is independent of
// hash layout.
using WordFrequencies = std::map<std::string, int64_t>;

void CountWords(const TokenizedLine& line, WordFrequencies& frequencies);
WordFrequencies CountWords(const std::vector<TokenizedLine>& corpus);

// Learns up to `n_merges` rules. Each round merges the adjacent symbol pair
// with the highest frequency-weighted count; ties go to the lexicographically
// greatest (left, right). Stops early once the best count drops below
// `min_frequency`. Throws InvalidArgument on an empty corpus.
MergeRuleTable LearnBpe(const std::vector<TokenizedLine>& corpus, int n_merges,
                        int min_frequency = kDefaultMinFrequency);
MergeRuleTable LearnBpe(const WordFrequencies& frequencies, int n_merges,
                        int min_frequency = kDefaultMinFrequency);

struct LanguageCorpus {
  std::string lang;
  std::vector<TokenizedLine> lines;
};

// One shared table over the union of all corpora's word counts. Requires at
// least two corpora.
MergeRuleTable LearnJoint(const std::vector<LanguageCorpus>& corpora,
                          int n_merges,
                          int min_frequency = kDefaultMinFrequency);

// Initial symbol sequence of a word, with the end-of-word sentinel attached
// to the last character.
std::vector<std::string> WordSymbols(std::string_view word);

// Encodes one word into marked subword tokens.
std::vector<std::string> ApplyBpeToWord(const MergeRuleTable& table,
                                        std::string_view word);
SegmentedSentence ApplyBpe(const MergeRuleTable& table,
                           const TokenizedLine& line);

SegmentedSentence SegmentChars(const TokenizedLine& line);

// Inverse of ApplyBpe / SegmentChars. `sentence_index` is only used in error
// messages. Throws Malformed on a dangling continuation marker or an empty
// word.
TokenizedLine Unsegment(const SegmentedSentence& sentence,
                        size_t sentence_index = 0);

struct VocabStats {
  int64_t distinct_tokens = 0;
  int64_t token_count = 0;
  double type_token_ratio = 0.0;
};

// Throws InvalidArgument on an empty corpus or mixed schemes.
VocabStats ComputeVocabStats(const std::vector<SegmentedSentence>& corpus);

}  // namespace segeval

#endif  // SEGEVAL_SEGMENT_H_
