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

#include "segeval/segment.h"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

#include "segeval/error.h"
#include "segeval/unicode.h"

namespace segeval {
namespace {

bool EndsWith(std::string_view text, std::string_view suffix) {
  return text.size() >= suffix.size() &&
         text.substr(text.size() - suffix.size()) == suffix;
}

using SymbolId = uint32_t;

class SymbolTable {
 public:
  SymbolId Intern(const std::string& symbol) {
    auto [it, inserted] =
        ids_.try_emplace(symbol, static_cast<SymbolId>(symbols_.size()));
    if (inserted) symbols_.push_back(symbol);
    return it->second;
  }
  const std::string& Get(SymbolId id) const { return symbols_[id]; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolId> ids_;
};

uint64_t PairKey(SymbolId left, SymbolId right) {
  return (static_cast<uint64_t>(left) << 32) | right;
}
SymbolId PairLeft(uint64_t key) { return static_cast<SymbolId>(key >> 32); }
SymbolId PairRight(uint64_t key) { return static_cast<SymbolId>(key); }

struct PairEntry {
  int64_t count;
  uint64_t pair;
};

// Ascending by count, then by (left, right) string order; the greatest
// element is the next merge.
struct PairOrder {
  const SymbolTable* symbols;
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.count != b.count) return a.count < b.count;
    if (a.pair == b.pair) return false;
    const std::string& al = symbols->Get(PairLeft(a.pair));
    const std::string& bl = symbols->Get(PairLeft(b.pair));
    if (al != bl) return al < bl;
    return symbols->Get(PairRight(a.pair)) < symbols->Get(PairRight(b.pair));
  }
};

struct WordEntry {
  std::vector<SymbolId> symbols;
  int64_t frequency;
};

// Incremental learner: pair counts live in a hash map mirrored by an ordered
// set, and an inverted index points each pair at the words that may hold it.
class BpeLearner {
 public:
  BpeLearner(const WordFrequencies& frequencies)
      : queue_(PairOrder{&symbols_}) {
    words_.reserve(frequencies.size());
    for (const auto& [word, frequency] : frequencies) {
      if (frequency <= 0 || word.empty()) continue;
      WordEntry entry{{}, frequency};
      for (const std::string& symbol : WordSymbols(word)) {
        entry.symbols.push_back(symbols_.Intern(symbol));
      }
      words_.push_back(std::move(entry));
    }
    for (size_t i = 0; i < words_.size(); ++i) AddPairs(i, +1);
  }

  MergeRuleTable Learn(int n_merges, int min_frequency) {
    std::vector<MergeRule> rules;
    while (static_cast<int>(rules.size()) < n_merges && !queue_.empty()) {
      const PairEntry best = *queue_.rbegin();
      if (best.count < min_frequency) break;
      const SymbolId left = PairLeft(best.pair);
      const SymbolId right = PairRight(best.pair);
      rules.push_back({symbols_.Get(left), symbols_.Get(right),
                       static_cast<int>(rules.size())});
      Merge(left, right);
    }
    return MergeRuleTable(std::move(rules), n_merges, min_frequency);
  }

 private:
  void ChangeCount(uint64_t pair, int64_t delta) {
    int64_t& count = counts_[pair];
    if (count > 0) queue_.erase(PairEntry{count, pair});
    count += delta;
    if (count > 0) {
      queue_.insert(PairEntry{count, pair});
    } else {
      counts_.erase(pair);
    }
  }

  void AddPairs(size_t word_index, int sign) {
    const WordEntry& word = words_[word_index];
    for (size_t i = 0; i + 1 < word.symbols.size(); ++i) {
      const uint64_t pair = PairKey(word.symbols[i], word.symbols[i + 1]);
      ChangeCount(pair, sign * word.frequency);
      if (sign > 0) where_[pair].push_back(static_cast<uint32_t>(word_index));
    }
  }

  void Merge(SymbolId left, SymbolId right) {
    const uint64_t target = PairKey(left, right);
    const SymbolId merged =
        symbols_.Intern(symbols_.Get(left) + symbols_.Get(right));
    std::vector<uint32_t> candidates = std::move(where_[target]);
    where_.erase(target);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    for (uint32_t index : candidates) {
      WordEntry& word = words_[index];
      bool present = false;
      for (size_t i = 0; i + 1 < word.symbols.size(); ++i) {
        if (word.symbols[i] == left && word.symbols[i + 1] == right) {
          present = true;
          break;
        }
      }
      if (!present) continue;  // stale index entry

      AddPairs(index, -1);
      std::vector<SymbolId> rewritten;
      rewritten.reserve(word.symbols.size());
      for (size_t i = 0; i < word.symbols.size();) {
        if (i + 1 < word.symbols.size() && word.symbols[i] == left &&
            word.symbols[i + 1] == right) {
          rewritten.push_back(merged);
          i += 2;
        } else {
          rewritten.push_back(word.symbols[i]);
          ++i;
        }
      }
      word.symbols = std::move(rewritten);
      AddPairs(index, +1);
    }
  }

  SymbolTable symbols_;
  std::vector<WordEntry> words_;
  std::unordered_map<uint64_t, int64_t> counts_;
  std::set<PairEntry, PairOrder> queue_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> where_;
};

void CheckLearnArguments(int n_merges, int min_frequency) {
  if (n_merges < 0) throw InvalidArgument("n_merges must be non-negative");
  if (min_frequency < 1) throw InvalidArgument("min_frequency must be >= 1");
}

}  // namespace

MergeRuleTable::MergeRuleTable(std::vector<MergeRule> rules, int n_merges,
                               int min_frequency)
    : rules_(std::move(rules)),
      n_merges_(n_merges),
      min_frequency_(min_frequency) {
  if (static_cast<int64_t>(rules_.size()) > n_merges_) {
    throw InvalidArgument("merge table holds more rules than n_merges");
  }
  for (size_t i = 0; i < rules_.size(); ++i) {
    const MergeRule& rule = rules_[i];
    if (rule.left.empty() || rule.right.empty()) {
      throw InvalidArgument("merge rule " + std::to_string(i) +
                            " has an empty side");
    }
    if (rule.rank != static_cast<int>(i)) {
      throw InvalidArgument("merge rule ranks must be contiguous from 0");
    }
    // The first occurrence of a duplicated pair wins, as in the rule file.
    ranks_.try_emplace(Key(rule.left, rule.right), rule.rank);
  }
}

std::string MergeRuleTable::Key(std::string_view left, std::string_view right) {
  std::string key;
  key.reserve(left.size() + right.size() + 1);
  key.append(left);
  key.push_back(' ');
  key.append(right);
  return key;
}

int MergeRuleTable::Rank(std::string_view left, std::string_view right) const {
  auto it = ranks_.find(Key(left, right));
  return it == ranks_.end() ? -1 : it->second;
}

MergeRuleTable MergeRuleTable::Prefix(size_t count) const {
  count = std::min(count, rules_.size());
  return MergeRuleTable(
      std::vector<MergeRule>(rules_.begin(), rules_.begin() + count),
      static_cast<int>(count), min_frequency_);
}

std::string_view SchemeName(Scheme scheme) {
  return scheme == Scheme::kChar ? "char" : "bpe";
}

Scheme ParseScheme(std::string_view name) {
  if (name == "char") return Scheme::kChar;
  if (name == "bpe") return Scheme::kBpe;
  throw InvalidArgument("unknown segmentation scheme '" + std::string(name) +
                        "' (expected char or bpe)");
}

void CountWords(const TokenizedLine& line, WordFrequencies& frequencies) {
  for (const std::string& token : line.tokens) {
    if (!token.empty()) ++frequencies[token];
  }
}

WordFrequencies CountWords(const std::vector<TokenizedLine>& corpus) {
  WordFrequencies frequencies;
  for (const TokenizedLine& line : corpus) CountWords(line, frequencies);
  return frequencies;
}

std::vector<std::string> WordSymbols(std::string_view word) {
  std::vector<std::string> symbols = unicode::SplitCodePoints(word);
  if (!symbols.empty()) symbols.back().append(kEndOfWord);
  return symbols;
}

MergeRuleTable LearnBpe(const WordFrequencies& frequencies, int n_merges,
                        int min_frequency) {
  CheckLearnArguments(n_merges, min_frequency);
  if (frequencies.empty()) {
    throw InvalidArgument("cannot learn BPE from an empty corpus");
  }
  return BpeLearner(frequencies).Learn(n_merges, min_frequency);
}

MergeRuleTable LearnBpe(const std::vector<TokenizedLine>& corpus, int n_merges,
                        int min_frequency) {
  return LearnBpe(CountWords(corpus), n_merges, min_frequency);
}

MergeRuleTable LearnJoint(const std::vector<LanguageCorpus>& corpora,
                          int n_merges, int min_frequency) {
  if (corpora.size() < 2) {
    throw InvalidArgument(
        "joint learning needs at least two corpora; use LearnBpe for one");
  }
  WordFrequencies merged;
  for (const LanguageCorpus& corpus : corpora) {
    for (const TokenizedLine& line : corpus.lines) CountWords(line, merged);
  }
  return LearnBpe(merged, n_merges, min_frequency);
}

std::vector<std::string> ApplyBpeToWord(const MergeRuleTable& table,
                                        std::string_view word) {
  std::vector<std::string> symbols = WordSymbols(word);
  while (symbols.size() > 1 && !table.empty()) {
    int best_rank = std::numeric_limits<int>::max();
    size_t best_at = 0;
    for (size_t i = 0; i + 1 < symbols.size(); ++i) {
      const int rank = table.Rank(symbols[i], symbols[i + 1]);
      if (rank >= 0 && rank < best_rank) {
        best_rank = rank;
        best_at = i;
      }
    }
    if (best_rank == std::numeric_limits<int>::max()) break;

    const std::string left = symbols[best_at];
    const std::string right = symbols[best_at + 1];
    std::vector<std::string> merged;
    merged.reserve(symbols.size());
    for (size_t i = 0; i < symbols.size();) {
      if (i + 1 < symbols.size() && symbols[i] == left &&
          symbols[i + 1] == right) {
        merged.push_back(left + right);
        i += 2;
      } else {
        merged.push_back(std::move(symbols[i]));
        ++i;
      }
    }
    symbols = std::move(merged);
  }

  if (!symbols.empty()) {
    std::string& last = symbols.back();
    last.resize(last.size() - kEndOfWord.size());
    for (size_t i = 0; i + 1 < symbols.size(); ++i) {
      symbols[i].append(kContinuation);
    }
  }
  return symbols;
}

SegmentedSentence ApplyBpe(const MergeRuleTable& table,
                           const TokenizedLine& line) {
  SegmentedSentence out;
  out.scheme = Scheme::kBpe;
  for (const std::string& word : line.tokens) {
    for (std::string& piece : ApplyBpeToWord(table, word)) {
      out.tokens.push_back(std::move(piece));
    }
  }
  return out;
}

SegmentedSentence SegmentChars(const TokenizedLine& line) {
  SegmentedSentence out;
  out.scheme = Scheme::kChar;
  for (size_t w = 0; w < line.tokens.size(); ++w) {
    if (w > 0) out.tokens.emplace_back(kSpaceToken);
    for (std::string& c : unicode::SplitCodePoints(line.tokens[w])) {
      out.tokens.push_back(std::move(c));
    }
  }
  return out;
}

TokenizedLine Unsegment(const SegmentedSentence& sentence,
                        size_t sentence_index) {
  auto fail = [sentence_index](const std::string& what) {
    return Malformed("sentence " + std::to_string(sentence_index) + ": " + what);
  };
  TokenizedLine line;
  std::string word;
  if (sentence.scheme == Scheme::kChar) {
    for (const std::string& token : sentence.tokens) {
      if (token == kSpaceToken) {
        if (word.empty()) throw fail("empty word between space tokens");
        line.tokens.push_back(std::move(word));
        word.clear();
      } else {
        word.append(token);
      }
    }
    if (!word.empty()) {
      line.tokens.push_back(std::move(word));
    } else if (!sentence.tokens.empty()) {
      throw fail("trailing space token");
    }
    return line;
  }

  bool open = false;
  for (const std::string& token : sentence.tokens) {
    if (EndsWith(token, kContinuation)) {
      word.append(token, 0, token.size() - kContinuation.size());
      open = true;
    } else {
      word.append(token);
      line.tokens.push_back(std::move(word));
      word.clear();
      open = false;
    }
  }
  if (open) throw fail("dangling continuation marker on the last token");
  return line;
}

VocabStats ComputeVocabStats(const std::vector<SegmentedSentence>& corpus) {
  if (corpus.empty()) {
    throw InvalidArgument("vocabulary statistics need a non-empty corpus");
  }
  const Scheme scheme = corpus.front().scheme;
  std::unordered_set<std::string> types;
  VocabStats stats;
  for (const SegmentedSentence& sentence : corpus) {
    if (sentence.scheme != scheme) {
      throw InvalidArgument("corpus mixes char and bpe segmentation");
    }
    for (const std::string& token : sentence.tokens) types.insert(token);
    stats.token_count += static_cast<int64_t>(sentence.tokens.size());
  }
  if (stats.token_count == 0) {
    throw InvalidArgument("vocabulary statistics need at least one token");
  }
  stats.distinct_tokens = static_cast<int64_t>(types.size());
  stats.type_token_ratio = static_cast<double>(stats.distinct_tokens) /
                           static_cast<double>(stats.token_count);
  return stats;
}

}  // namespace segeval
