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

#ifndef SEGEVAL_PROB_LOG_H_
#define SEGEVAL_PROB_LOG_H_

#include <iosfwd>
#include <string_view>
#include <vector>

#include "segeval/analysis.h"

namespace segeval {

// Token probability logs are JSON lines, one object per sentence:
//   {"id": 3, "tokens": ["l", "e"], "probs": [0.93, 0.91]}
// Blank lines are skipped. Errors name the 1-based record (line) number.
TokenProbabilities ParseProbabilityRecord(std::string_view line,
                                          size_t record_number);
std::vector<TokenProbabilities> ReadProbabilityLog(std::istream& in);

void WriteProbabilityRecord(const TokenProbabilities& record, std::ostream& out);

}  // namespace segeval

#endif  // SEGEVAL_PROB_LOG_H_
