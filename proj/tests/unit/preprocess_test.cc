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

#include <gtest/gtest.h>

#include "segeval/error.h"

namespace segeval {
namespace {

using Tokens = std::vector<std::string>;

Tokens Tok(std::string_view text, std::string_view lang = "en") {
  return Tokenize(text, lang).tokens;
}

TEST(DeescapeTest, ReplacesFixedEntities) {
  EXPECT_EQ(Deescape("a &amp; b"), "a & b");
  EXPECT_EQ(Deescape("x"), "x");
  EXPECT_EQ(Deescape("&lt;&gt;&quot;&apos;&#91;&#93;&#124;"), "<>\"'[]|");
  EXPECT_EQ(Deescape("&unknown; &amp"), "&unknown; &amp");
}

TEST(DeescapeTest, AmpersandResolvesLast) {
  EXPECT_EQ(Deescape("&amp;lt;"), "&lt;");
  EXPECT_EQ(Deescape("&amp;amp;"), "&amp;");
}

TEST(StripParentheticalsTest, RemovesAnnotations) {
  EXPECT_EQ(StripParentheticals("(Applause) Thank you").text, "Thank you");
  EXPECT_EQ(StripParentheticals("no parens").text, "no parens");
  EXPECT_EQ(StripParentheticals("a (b (c) d) e").text, "a e");
  EXPECT_EQ(StripParentheticals("Thanks (Laughter)").text, "Thanks");
  EXPECT_FALSE(StripParentheticals("a (b) c").unbalanced);
}

TEST(StripParentheticalsTest, UnclosedParenDropsRestAndIsCounted) {
  PreprocessDiagnostics diagnostics;
  EXPECT_EQ(StripParentheticals("keep (drop this", &diagnostics), "keep");
  EXPECT_EQ(diagnostics.unbalanced_parens.load(), 1);
  const ParenthesisResult stray = StripParentheticals("a ) b");
  EXPECT_TRUE(stray.unbalanced);
  EXPECT_EQ(stray.text, "a ) b");
}

TEST(TokenizerTest, SplitsPunctuation) {
  EXPECT_EQ(Tok("Hello, world!"), (Tokens{"Hello", ",", "world", "!"}));
  EXPECT_EQ(Tok("abc"), (Tokens{"abc"}));
  EXPECT_EQ(Tok("\"Quoted\" (text)?"),
            (Tokens{"\"", "Quoted", "\"", "(", "text", ")", "?"}));
}

TEST(TokenizerTest, CollapsesWhitespace) {
  EXPECT_EQ(Tok("  a \t  b  "), (Tokens{"a", "b"}));
  EXPECT_TRUE(Tok("   ").empty());
}

TEST(TokenizerTest, NumbersAndHyphens) {
  EXPECT_EQ(Tok("1,000 people, well-known"),
            (Tokens{"1,000", "people", ",", "well-known"}));
  EXPECT_EQ(Tok("pi is 3.14."), (Tokens{"pi", "is", "3.14", "."}));
}

TEST(TokenizerTest, Periods) {
  EXPECT_EQ(Tok("The U.S. economy."), (Tokens{"The", "U.S.", "economy", "."}));
  EXPECT_EQ(Tok("Wait... what"), (Tokens{"Wait", "...", "what"}));
  EXPECT_EQ(Tok("etc. and more"), (Tokens{"etc.", "and", "more"}));
  EXPECT_EQ(Tok("End. Next"), (Tokens{"End", ".", "Next"}));
}

TEST(TokenizerTest, EnglishApostrophes) {
  EXPECT_EQ(Tok("It's John's"), (Tokens{"It", "'s", "John", "'s"}));
  EXPECT_EQ(Tok("don't"), (Tokens{"don", "'t"}));
}

TEST(TokenizerTest, RomanceElision) {
  EXPECT_EQ(Tok("l'eau", "fr"), (Tokens{"l'", "eau"}));
  EXPECT_EQ(Tok("dell'arte", "it"), (Tokens{"dell'", "arte"}));
  EXPECT_EQ(Tok("C'est", "fr-FR"), (Tokens{"C'", "est"}));
}

TEST(TokenizerTest, UnknownLanguageFallsBack) {
  PreprocessDiagnostics diagnostics;
  const TokenizedLine line = Tokenize("a'b", "xx", &diagnostics);
  EXPECT_EQ(line.tokens, (Tokens{"a", "'", "b"}));
  EXPECT_EQ(diagnostics.unknown_language.load(), 1);
  EXPECT_FALSE(Tokenizer("xx").known_language());
  EXPECT_TRUE(Tokenizer("de").known_language());
  EXPECT_EQ(Tokenizer("de").apostrophe_rule(), ApostropheRule::kDefault);
}

TEST(TokenizerTest, TokensAreNonEmptyWithoutSpaces) {
  for (const std::string text :
       {"a ,, b", "« Bonjour » !", "x y", "(( ))", "'''"}) {
    for (const std::string& token : Tok(text, "fr")) {
      EXPECT_FALSE(token.empty()) << text;
      EXPECT_EQ(token.find(' '), std::string::npos) << text;
    }
  }
}

TEST(NormalizeAsrTargetTest, LowercasesAndDropsPunctuation) {
  EXPECT_EQ(NormalizeAsrTarget({{"Hello", ",", "World"}, "en"}).tokens,
            (Tokens{"hello", "world"}));
  EXPECT_EQ(NormalizeAsrTarget({{"ok"}, "en"}).tokens, (Tokens{"ok"}));
  EXPECT_EQ(NormalizeAsrTarget({{"C'est", "!"}, "fr"}).tokens,
            (Tokens{"c'est"}));
}

TEST(StepsTest, ParsesNames) {
  EXPECT_EQ(ParseStep("strip-parens"), PreprocessStep::kStripParentheticals);
  EXPECT_EQ(StepName(PreprocessStep::kNormalizeAsr), "asr-normalize");
  EXPECT_THROW(ParseStep("stem"), Error);
}

TEST(StepsTest, RejectsUnusableOrders) {
  using S = PreprocessStep;
  EXPECT_NO_THROW(ValidateSteps({S::kDeescape, S::kStripParentheticals,
                                 S::kTokenize, S::kNormalizeAsr}));
  EXPECT_NO_THROW(ValidateSteps({S::kTokenize, S::kStripParentheticals}));
  EXPECT_THROW(ValidateSteps({S::kTokenize, S::kDeescape}), Error);
  EXPECT_THROW(ValidateSteps({S::kTokenize, S::kTokenize}), Error);
  EXPECT_THROW(ValidateSteps({S::kNormalizeAsr, S::kTokenize}), Error);
  EXPECT_THROW(ValidateSteps({S::kNormalizeAsr}), Error);
}

TEST(PreprocessorTest, RunsChain) {
  PreprocessOptions options;
  options.lang = "fr";
  options.steps = {PreprocessStep::kDeescape,
                   PreprocessStep::kStripParentheticals,
                   PreprocessStep::kTokenize};
  const Preprocessor preprocessor(options);
  EXPECT_EQ(preprocessor.Process("(Laughter) Bonjour."), "Bonjour .");
  EXPECT_EQ(preprocessor.Process("l'eau &amp; (Music) le vin"),
            "l' eau & le vin");
  EXPECT_EQ(preprocessor.Process(""), "");
}

TEST(PreprocessorTest, AsrTargets) {
  PreprocessOptions options;
  options.steps = {PreprocessStep::kDeescape, PreprocessStep::kTokenize,
                   PreprocessStep::kNormalizeAsr};
  EXPECT_EQ(Preprocessor(options).Process("Hello, World!"), "hello world");
}

}  // namespace
}  // namespace segeval
