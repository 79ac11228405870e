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

#ifndef SEGEVAL_UNICODE_H_
#define SEGEVAL_UNICODE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 helpers and Unicode character classes backed by ICU.
namespace segeval::unicode {

// Byte offset of the first ill-formed sequence, or nullopt for valid UTF-8.
std::optional<size_t> FindInvalidUtf8(std::string_view text);

// Throws Error(kMalformed) on ill-formed input.
std::u32string Decode(std::string_view text);
std::string Encode(std::u32string_view text);
void Append(char32_t c, std::string& out);

// One string per Unicode scalar value.
std::vector<std::string> SplitCodePoints(std::string_view text);
size_t CodePointCount(std::string_view text);

// General category P*.
bool IsPunctuation(char32_t c);
// General categories L*, N*, M*.
bool IsAlnum(char32_t c);
bool IsLetter(char32_t c);
bool IsDigit(char32_t c);
bool IsLowercaseLetter(char32_t c);
bool IsUppercaseLetter(char32_t c);
bool IsWhitespace(char32_t c);

char32_t ToLower(char32_t c);
std::string ToLower(std::string_view text);

// True when every code point of a non-empty token is punctuation.
bool IsPunctuationOnly(std::string_view token);

// Maps every run of Unicode whitespace to one ASCII space and trims the ends.
std::string CollapseWhitespace(std::string_view text);

// Splits on ASCII whitespace; used for pre-tokenized, space-separated input.
std::vector<std::string> SplitOnSpaces(std::string_view text);

std::string Join(const std::vector<std::string>& tokens, std::string_view sep = " ");

}  // namespace segeval::unicode

#endif  // SEGEVAL_UNICODE_H_
