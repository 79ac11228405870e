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

#ifndef SEGEVAL_RULES_IO_H_
#define SEGEVAL_RULES_IO_H_

#include <iosfwd>
#include <string>

#include "segeval/segment.h"

namespace segeval {

// Merge rule files: a "#version: 0.2" header followed by one "left right"
// rule per line, rank given by line order. The header is optional on read.
inline constexpr std::string_view kRulesHeader = "#version: 0.2";

void WriteRules(const MergeRuleTable& table, std::ostream& out);

// Throws Malformed naming the 1-based line of the first bad rule.
MergeRuleTable ReadRules(std::istream& in);

MergeRuleTable LoadRulesFile(const std::string& path);
void SaveRulesFile(const MergeRuleTable& table, const std::string& path);

}  // namespace segeval

#endif  // SEGEVAL_RULES_IO_H_
