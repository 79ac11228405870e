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

#ifndef SEGEVAL_PREPROCESS_H_
#define SEGEVAL_PREPROCESS_H_

#include <atomic>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Deterministic text normalization: entity deescaping, rule-based word
// tokenization, parenthetical removal and ASR-target normalization.
namespace segeval {

// A word-tokenized sentence. Tokens are never empty and never contain spaces.
struct TokenizedLine {
  std::vector<std::string> tokens;
  std::string lang;

  friend bool operator==(const TokenizedLine& a, const TokenizedLine& b) {
    return a.tokens == b.tokens;
  }
};

// Counters shared by corpus drivers. Safe to update from many threads.
struct PreprocessDiagnostics {
  std::atomic<int64_t> unbalanced_parens{0};
  std::atomic<int64_t> unknown_language{0};
};

// Replaces &amp; &lt; &gt; &quot; &apos; &#91; &#93; &#124;. &amp; is
// resolved last so "&amp;lt;" becomes "&lt;" and not "<".
std::string Deescape(std::string_view text);

struct ParenthesisResult {
  std::string text;
  bool unbalanced = false;
};

// Removes every maximal "(...)" span including nested ones, collapses the
// surrounding whitespace and trims. An unclosed "(" removes the rest of the
// line and sets `unbalanced`.
ParenthesisResult StripParentheticals(std::string_view text);
std::string StripParentheticals(std::string_view text,
                                PreprocessDiagnostics* diagnostics);

// Language-specific apostrophe handling. Anything else uses kDefault.
enum class ApostropheRule {
  kEnglish,  // It's -> It 's
  kRomance,  // l'eau -> l' eau (fr, it)
  kDefault,  // every apostrophe becomes its own token
};

// Rule-based tokenizer. Separates punctuation and symbols from words, keeps
// hyphens attached, splits commas except between digits, splits a
// word-final period when it ends the sentence or precedes a word that does
// not start lowercase, keeps dotted abbreviations such as "U.S." intact and
// isolates runs of two or more periods.
class Tokenizer {
 public:
  explicit Tokenizer(std::string_view lang);

  TokenizedLine Tokenize(std::string_view text) const;

  const std::string& lang() const { return lang_; }
  ApostropheRule apostrophe_rule() const { return rule_; }
  // False when `lang` fell back to default rules.
  bool known_language() const { return known_; }

 private:
  std::string lang_;
  ApostropheRule rule_;
  bool known_;
};

TokenizedLine Tokenize(std::string_view text, std::string_view lang,
                       PreprocessDiagnostics* diagnostics = nullptr);

// Lowercases every token and drops tokens made only of punctuation.
TokenizedLine NormalizeAsrTarget(const TokenizedLine& line);

// Ordered preprocessing chain applied to one raw line.
enum class PreprocessStep {
  kDeescape,
  kStripParentheticals,
  kTokenize,
  kNormalizeAsr,
};

struct PreprocessOptions {
  std::vector<PreprocessStep> steps{PreprocessStep::kDeescape,
                                    PreprocessStep::kTokenize};
  std::string lang = "en";
};

// Throws InvalidArgument when the order is not usable: a step appears twice,
// deescape comes after tokenize, or ASR normalization runs before tokenize.
void ValidateSteps(const std::vector<PreprocessStep>& steps);

PreprocessStep ParseStep(std::string_view name);
std::string_view StepName(PreprocessStep step);

// Runs the configured chain and returns the space-joined result.
class Preprocessor {
 public:
  explicit Preprocessor(PreprocessOptions options);

  std::string Process(std::string_view line,
                      PreprocessDiagnostics* diagnostics = nullptr) const;

  const PreprocessOptions& options() const { return options_; }
  const Tokenizer& tokenizer() const { return tokenizer_; }

 private:
  PreprocessOptions options_;
  Tokenizer tokenizer_;
};

}  // namespace segeval

#endif  // SEGEVAL_PREPROCESS_H_
