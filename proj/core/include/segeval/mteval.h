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

#ifndef SEGEVAL_MTEVAL_H_
#define SEGEVAL_MTEVAL_H_

#include <string_view>

#include "segeval/preprocess.h"

namespace segeval {

// Tokenization used for the mteval-style BLEU variant. Case is preserved.
//
//   1. &quot; &amp; &lt; &gt; are unescaped.
//   2. Each of  { | } ~ [ \ ] ^ _ ` ! " # $ % & ( ) * + : ; < = > ? @ /
//      becomes its own token.
//   3. '.' and ',' are split off unless both neighbours are digits (3.5).
//   4. '-' is split off after a digit.
//   5. A word-internal apostrophe between letters starts a new token
//      (It's -> It 's); any other apostrophe is its own token.
TokenizedLine MtevalTokenize(std::string_view text);

}  // namespace segeval

#endif  // SEGEVAL_MTEVAL_H_
