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

#include "segeval/mteval.h"

#include <string>

#include "segeval/unicode.h"

namespace segeval {
namespace {

bool IsAsciiDigit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool IsIsolatedSymbol(char32_t c) {
  switch (c) {
    case U'{': case U'|': case U'}': case U'~':
    case U'[': case U'\\': case U']': case U'^': case U'_': case U'`':
    case U'!': case U'"': case U'#': case U'$': case U'%': case U'&':
    case U'(': case U')': case U'*': case U'+':
    case U':': case U';': case U'<': case U'=': case U'>': case U'?':
    case U'@': case U'/':
      return true;
    default:
      return false;
  }
}

std::string Unescape(std::string_view text) {
  std::string out(text);
  auto replace = [&out](std::string_view from, std::string_view to) {
    std::string result;
    size_t pos = 0;
    for (size_t hit; (hit = out.find(from, pos)) != std::string::npos;) {
      result.append(out, pos, hit - pos);
      result.append(to);
      pos = hit + from.size();
    }
    result.append(out, pos, std::string::npos);
    out = std::move(result);
  };
  replace("&quot;", "\"");
  replace("&amp;", "&");
  replace("&lt;", "<");
  replace("&gt;", ">");
  return out;
}

}  // namespace

TokenizedLine MtevalTokenize(std::string_view text) {
  const std::u32string in =
      U" " + unicode::Decode(unicode::CollapseWhitespace(Unescape(text))) + U" ";
  std::u32string out;
  out.reserve(in.size() * 2);
  auto isolate = [&out](char32_t c) {
    out.push_back(U' ');
    out.push_back(c);
    out.push_back(U' ');
  };
  for (size_t i = 1; i + 1 < in.size(); ++i) {
    const char32_t prev = in[i - 1];
    const char32_t c = in[i];
    const char32_t next = in[i + 1];
    if (IsIsolatedSymbol(c)) {
      isolate(c);
    } else if (c == U'.' || c == U',') {
      if (IsAsciiDigit(prev) && IsAsciiDigit(next)) {
        out.push_back(c);
      } else {
        isolate(c);
      }
    } else if (c == U'-' && IsAsciiDigit(prev)) {
      out.push_back(U' ');
      out.push_back(c);
      out.push_back(U' ');
    } else if (c == U'\'') {
      if (unicode::IsLetter(prev) && unicode::IsLetter(next)) {
        out.push_back(U' ');
        out.push_back(c);
      } else {
        isolate(c);
      }
    } else {
      out.push_back(c);
    }
  }
  TokenizedLine line;
  line.tokens = unicode::SplitOnSpaces(unicode::Encode(out));
  return line;
}

}  // namespace segeval
