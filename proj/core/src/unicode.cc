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

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <cstdint>

#include "segeval/error.h"

namespace segeval::unicode {
namespace {

bool NextCodePoint(std::string_view text, size_t& pos, char32_t& out) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  auto i = static_cast<int32_t>(pos);
  UChar32 c;
  U8_NEXT(s, i, length, c);
  pos = static_cast<size_t>(i);
  if (c < 0) return false;
  out = static_cast<char32_t>(c);
  return true;
}

bool InCategories(char32_t c, uint32_t mask) {
  return (U_GET_GC_MASK(static_cast<UChar32>(c)) & mask) != 0;
}

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

}  // namespace

std::optional<size_t> FindInvalidUtf8(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t start = pos;
    char32_t c;
    if (!NextCodePoint(text, pos, c)) return start;
  }
  return std::nullopt;
}

std::u32string Decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t start = pos;
    char32_t c;
    if (!NextCodePoint(text, pos, c)) {
      throw Malformed("invalid UTF-8 at byte offset " + std::to_string(start));
    }
    out.push_back(c);
  }
  return out;
}

void Append(char32_t c, std::string& out) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
  if (error) throw InvalidArgument("cannot encode code point as UTF-8");
  out.append(reinterpret_cast<const char*>(buf), static_cast<size_t>(n));
}

std::string Encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) Append(c, out);
  return out;
}

std::vector<std::string> SplitCodePoints(std::string_view text) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t start = pos;
    char32_t c;
    if (!NextCodePoint(text, pos, c)) {
      throw Malformed("invalid UTF-8 at byte offset " + std::to_string(start));
    }
    out.emplace_back(text.substr(start, pos - start));
  }
  return out;
}

size_t CodePointCount(std::string_view text) {
  size_t count = 0;
  for (char ch : text) {
    // Count every byte that is not a continuation byte.
    if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++count;
  }
  return count;
}

bool IsPunctuation(char32_t c) { return InCategories(c, U_GC_P_MASK); }

bool IsAlnum(char32_t c) {
  return InCategories(c, U_GC_L_MASK | U_GC_N_MASK | U_GC_M_MASK);
}

bool IsLetter(char32_t c) { return InCategories(c, U_GC_L_MASK); }

bool IsDigit(char32_t c) { return InCategories(c, U_GC_N_MASK); }

bool IsLowercaseLetter(char32_t c) { return InCategories(c, U_GC_LL_MASK); }

bool IsUppercaseLetter(char32_t c) {
  return InCategories(c, U_GC_LU_MASK | U_GC_LT_MASK);
}

bool IsWhitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

char32_t ToLower(char32_t c) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
}

std::string ToLower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : Decode(text)) Append(ToLower(c), out);
  return out;
}

bool IsPunctuationOnly(std::string_view token) {
  if (token.empty()) return false;
  for (char32_t c : Decode(token)) {
    if (!IsPunctuation(c)) return false;
  }
  return true;
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  size_t pos = 0;
  while (pos < text.size()) {
    const size_t start = pos;
    char32_t c;
    if (!NextCodePoint(text, pos, c)) {
      throw Malformed("invalid UTF-8 at byte offset " + std::to_string(start));
    }
    if (IsWhitespace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.append(text.substr(start, pos - start));
  }
  return out;
}

std::vector<std::string> SplitOnSpaces(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsAsciiSpace(text[i])) ++i;
    const size_t start = i;
    while (i < text.size() && !IsAsciiSpace(text[i])) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

std::string Join(const std::vector<std::string>& tokens, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(tokens[i]);
  }
  return out;
}

}  // namespace segeval::unicode
