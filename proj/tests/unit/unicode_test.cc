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

#include "segeval/unicode.h"

#include <gtest/gtest.h>

#include "segeval/error.h"

namespace segeval::unicode {
namespace {

TEST(Utf8Test, FindsFirstInvalidByte) {
  EXPECT_FALSE(FindInvalidUtf8("héllo 中").has_value());
  EXPECT_EQ(FindInvalidUtf8("ab\xff"), 2u);
  EXPECT_EQ(FindInvalidUtf8("a\xc3"), 1u);       // truncated sequence
  EXPECT_EQ(FindInvalidUtf8("\xc0\xaf"), 0u);    // overlong
  EXPECT_EQ(FindInvalidUtf8("\xed\xa0\x80"), 0u);  // surrogate
}

TEST(Utf8Test, DecodeEncodeRoundTrip) {
  const std::string text = "aé中😀";
  const std::u32string decoded = Decode(text);
  ASSERT_EQ(decoded.size(), 4u);
  EXPECT_EQ(decoded[2], U'中');
  EXPECT_EQ(Encode(decoded), text);
  EXPECT_THROW(Decode("\xff"), Error);
}

TEST(Utf8Test, SplitsCodePoints) {
  EXPECT_EQ(SplitCodePoints("héllo"),
            (std::vector<std::string>{"h", "é", "l", "l", "o"}));
  EXPECT_EQ(CodePointCount("中文 x"), 4u);
}

TEST(CategoryTest, ClassifiesCharacters) {
  EXPECT_TRUE(IsPunctuation(U','));
  EXPECT_TRUE(IsPunctuation(U'«'));
  EXPECT_FALSE(IsPunctuation(U'$'));  // symbol, not punctuation
  EXPECT_TRUE(IsAlnum(U'é'));
  EXPECT_TRUE(IsAlnum(U'7'));
  EXPECT_FALSE(IsAlnum(U'-'));
  EXPECT_TRUE(IsLowercaseLetter(U'ß'));
  EXPECT_TRUE(IsUppercaseLetter(U'É'));
  EXPECT_TRUE(IsWhitespace(U' '));
}

TEST(CaseTest, LowercasesUnicode) {
  EXPECT_EQ(ToLower("ÉCOLE Straße"), "école straße");
}

TEST(PunctuationOnlyTest, RequiresEveryCodePoint) {
  EXPECT_TRUE(IsPunctuationOnly("!?"));
  EXPECT_TRUE(IsPunctuationOnly("«"));
  EXPECT_FALSE(IsPunctuationOnly("C'est"));
  EXPECT_FALSE(IsPunctuationOnly(""));
}

TEST(WhitespaceTest, CollapsesAndSplits) {
  EXPECT_EQ(CollapseWhitespace("  a \t b  c  "), "a b c");
  EXPECT_EQ(SplitOnSpaces("  a  b "), (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(SplitOnSpaces("").empty());
  EXPECT_EQ(Join({"a", "b"}), "a b");
}

}  // namespace
}  // namespace segeval::unicode
