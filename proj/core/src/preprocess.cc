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

#include "segeval/preprocess.h"

#include <algorithm>
#include <array>
#include <utility>

#include "segeval/error.h"
#include "segeval/unicode.h"

namespace segeval {
namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 8>
    kEntities = {{
        {"&lt;", "<"},
        {"&gt;", ">"},
        {"&quot;", "\""},
        {"&apos;", "'"},
        {"&#91;", "["},
        {"&#93;", "]"},
        {"&#124;", "|"},
        {"&amp;", "&"},  // must stay last
    }};

void ReplaceAll(std::string& text, std::string_view from, std::string_view to) {
  std::string out;
  size_t pos = 0;
  while (true) {
    const size_t hit = text.find(from, pos);
    if (hit == std::string::npos) break;
    out.append(text, pos, hit - pos);
    out.append(to);
    pos = hit + from.size();
  }
  if (pos == 0) return;
  out.append(text, pos, std::string::npos);
  text = std::move(out);
}

// Primary language subtag, lowercased: "fr-FR" -> "fr".
std::string PrimarySubtag(std::string_view lang) {
  std::string out;
  for (char c : lang) {
    if (c == '-' || c == '_') break;
    out.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
  }
  return out;
}

constexpr char32_t kSpace = U' ';

std::u32string Pad(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size() + 2);
  out.push_back(kSpace);
  out.append(text);
  out.push_back(kSpace);
  return out;
}

// Applies `emit` to every character of `in` with its neighbours; `in` is
// padded so neighbours always exist for interior characters.
template <typename Emit>
std::u32string Rewrite(const std::u32string& in, Emit emit) {
  std::u32string out;
  out.reserve(in.size() * 2);
  for (size_t i = 0; i < in.size(); ++i) {
    const char32_t prev = i > 0 ? in[i - 1] : kSpace;
    const char32_t next = i + 1 < in.size() ? in[i + 1] : kSpace;
    emit(prev, in[i], next, out);
  }
  return out;
}

void EmitIsolated(char32_t c, std::u32string& out) {
  out.push_back(kSpace);
  out.push_back(c);
  out.push_back(kSpace);
}

bool KeptInWord(char32_t c) {
  return unicode::IsAlnum(c) || c == U'.' || c == U'\'' || c == U',' ||
         c == U'-';
}

std::vector<std::u32string> SplitSpaces(const std::u32string& text) {
  std::vector<std::u32string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == kSpace) ++i;
    const size_t start = i;
    while (i < text.size() && text[i] != kSpace) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

// Splits runs of two or more periods out of a token.
void SplitDotRuns(const std::u32string& token, std::vector<std::u32string>& out) {
  size_t i = 0;
  std::u32string current;
  while (i < token.size()) {
    if (token[i] == U'.') {
      size_t j = i;
      while (j < token.size() && token[j] == U'.') ++j;
      if (j - i >= 2) {
        if (!current.empty()) out.push_back(std::move(current));
        current.clear();
        out.push_back(token.substr(i, j - i));
      } else {
        current.push_back(U'.');
      }
      i = j;
    } else {
      current.push_back(token[i++]);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
}

bool HasLetter(std::u32string_view text) {
  return std::any_of(text.begin(), text.end(), unicode::IsLetter);
}

}  // namespace

std::string Deescape(std::string_view text) {
  std::string out(text);
  for (const auto& [entity, replacement] : kEntities) {
    ReplaceAll(out, entity, replacement);
  }
  return out;
}

ParenthesisResult StripParentheticals(std::string_view text) {
  ParenthesisResult result;
  std::string kept;
  kept.reserve(text.size());
  int depth = 0;
  for (char c : text) {
    if (c == '(') {
      ++depth;
    } else if (c == ')' && depth > 0) {
      --depth;
    } else if (depth == 0) {
      // A stray ')' is kept as text but still marks the line.
      if (c == ')') result.unbalanced = true;
      kept.push_back(c);
    }
  }
  if (depth > 0) result.unbalanced = true;
  result.text = unicode::CollapseWhitespace(kept);
  return result;
}

std::string StripParentheticals(std::string_view text,
                                PreprocessDiagnostics* diagnostics) {
  ParenthesisResult result = StripParentheticals(text);
  if (result.unbalanced && diagnostics != nullptr) {
    diagnostics->unbalanced_parens.fetch_add(1, std::memory_order_relaxed);
  }
  return std::move(result.text);
}

Tokenizer::Tokenizer(std::string_view lang) : lang_(PrimarySubtag(lang)) {
  static constexpr std::array<std::string_view, 6> kDefaultRuleLanguages = {
      "de", "es", "nl", "pt", "ro", "ru"};
  if (lang_ == "en") {
    rule_ = ApostropheRule::kEnglish;
    known_ = true;
  } else if (lang_ == "fr" || lang_ == "it") {
    rule_ = ApostropheRule::kRomance;
    known_ = true;
  } else {
    rule_ = ApostropheRule::kDefault;
    known_ = std::find(kDefaultRuleLanguages.begin(), kDefaultRuleLanguages.end(),
                       lang_) != kDefaultRuleLanguages.end();
  }
}

TokenizedLine Tokenizer::Tokenize(std::string_view text) const {
  using unicode::IsDigit;
  using unicode::IsLetter;

  std::u32string buf = Pad(unicode::Decode(unicode::CollapseWhitespace(text)));

  // Isolate every character that cannot live inside a word.
  buf = Rewrite(buf, [](char32_t, char32_t c, char32_t, std::u32string& out) {
    if (c == kSpace || KeptInWord(c)) {
      out.push_back(c);
    } else {
      EmitIsolated(c, out);
    }
  });

  // Commas survive only between two digits (1,000).
  buf = Rewrite(buf, [](char32_t prev, char32_t c, char32_t next,
                        std::u32string& out) {
    if (c == U',' && !(IsDigit(prev) && IsDigit(next))) {
      EmitIsolated(c, out);
    } else {
      out.push_back(c);
    }
  });

  const ApostropheRule rule = rule_;
  buf = Rewrite(buf, [rule](char32_t prev, char32_t c, char32_t next,
                            std::u32string& out) {
    if (c != U'\'') {
      out.push_back(c);
      return;
    }
    const bool letter_before = IsLetter(prev);
    const bool letter_after = IsLetter(next);
    switch (rule) {
      case ApostropheRule::kEnglish:
        if ((letter_before && letter_after) ||
            (IsDigit(prev) && next == U's')) {
          out.push_back(kSpace);
          out.push_back(c);
        } else if (IsDigit(prev) && letter_after) {
          out.push_back(c);
        } else {
          EmitIsolated(c, out);
        }
        return;
      case ApostropheRule::kRomance:
        if (letter_before && letter_after) {
          out.push_back(c);
          out.push_back(kSpace);
        } else {
          EmitIsolated(c, out);
        }
        return;
      case ApostropheRule::kDefault:
        EmitIsolated(c, out);
        return;
    }
  });

  std::vector<std::u32string> words;
  for (const auto& raw : SplitSpaces(buf)) SplitDotRuns(raw, words);

  TokenizedLine line;
  line.lang = lang_;
  line.tokens.reserve(words.size() + 1);
  for (size_t i = 0; i < words.size(); ++i) {
    const std::u32string& word = words[i];
    const bool trailing_period = word.size() > 1 && word.back() == U'.' &&
                                 word[word.size() - 2] != U'.';
    if (trailing_period) {
      const std::u32string_view prefix(word.data(), word.size() - 1);
      const bool abbreviation =
          prefix.find(U'.') != std::u32string_view::npos && HasLetter(prefix);
      const bool lowercase_follows =
          i + 1 < words.size() && unicode::IsLowercaseLetter(words[i + 1][0]);
      if (!abbreviation && !lowercase_follows) {
        line.tokens.push_back(unicode::Encode(prefix));
        line.tokens.emplace_back(".");
        continue;
      }
    }
    line.tokens.push_back(unicode::Encode(word));
  }
  return line;
}

TokenizedLine Tokenize(std::string_view text, std::string_view lang,
                       PreprocessDiagnostics* diagnostics) {
  Tokenizer tokenizer(lang);
  if (!tokenizer.known_language() && diagnostics != nullptr) {
    diagnostics->unknown_language.fetch_add(1, std::memory_order_relaxed);
  }
  return tokenizer.Tokenize(text);
}

TokenizedLine NormalizeAsrTarget(const TokenizedLine& line) {
  TokenizedLine out;
  out.lang = line.lang;
  for (const std::string& token : line.tokens) {
    if (unicode::IsPunctuationOnly(token)) continue;
    out.tokens.push_back(unicode::ToLower(token));
  }
  return out;
}

PreprocessStep ParseStep(std::string_view name) {
  if (name == "deescape") return PreprocessStep::kDeescape;
  if (name == "strip-parens") return PreprocessStep::kStripParentheticals;
  if (name == "tokenize") return PreprocessStep::kTokenize;
  if (name == "asr-normalize") return PreprocessStep::kNormalizeAsr;
  throw InvalidArgument("unknown preprocessing step '" + std::string(name) +
                        "' (expected deescape, strip-parens, tokenize or "
                        "asr-normalize)");
}

std::string_view StepName(PreprocessStep step) {
  switch (step) {
    case PreprocessStep::kDeescape:
      return "deescape";
    case PreprocessStep::kStripParentheticals:
      return "strip-parens";
    case PreprocessStep::kTokenize:
      return "tokenize";
    case PreprocessStep::kNormalizeAsr:
      return "asr-normalize";
  }
  return "unknown";
}

void ValidateSteps(const std::vector<PreprocessStep>& steps) {
  auto position = [&steps](PreprocessStep step) -> std::ptrdiff_t {
    auto it = std::find(steps.begin(), steps.end(), step);
    return it == steps.end() ? -1 : it - steps.begin();
  };
  for (size_t i = 0; i < steps.size(); ++i) {
    if (std::count(steps.begin(), steps.end(), steps[i]) > 1) {
      throw InvalidArgument("preprocessing step '" +
                            std::string(StepName(steps[i])) +
                            "' listed more than once");
    }
  }
  const auto deescape = position(PreprocessStep::kDeescape);
  const auto tokenize = position(PreprocessStep::kTokenize);
  const auto asr = position(PreprocessStep::kNormalizeAsr);
  if (deescape >= 0 && tokenize >= 0 && deescape > tokenize) {
    throw InvalidArgument("deescape must run before tokenize");
  }
  if (asr >= 0 && (tokenize < 0 || asr < tokenize)) {
    throw InvalidArgument("asr-normalize requires a preceding tokenize step");
  }
}

Preprocessor::Preprocessor(PreprocessOptions options)
    : options_(std::move(options)), tokenizer_(options_.lang) {
  ValidateSteps(options_.steps);
}

std::string Preprocessor::Process(std::string_view line,
                                  PreprocessDiagnostics* diagnostics) const {
  std::string text(line);
  for (PreprocessStep step : options_.steps) {
    switch (step) {
      case PreprocessStep::kDeescape:
        text = Deescape(text);
        break;
      case PreprocessStep::kStripParentheticals:
        text = StripParentheticals(text, diagnostics);
        break;
      case PreprocessStep::kTokenize:
        text = unicode::Join(tokenizer_.Tokenize(text).tokens);
        break;
      case PreprocessStep::kNormalizeAsr: {
        TokenizedLine tokens{unicode::SplitOnSpaces(text), tokenizer_.lang()};
        text = unicode::Join(NormalizeAsrTarget(tokens).tokens);
        break;
      }
    }
  }
  return text;
}

}  // namespace segeval
