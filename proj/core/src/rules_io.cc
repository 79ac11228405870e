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

#include "segeval/rules_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "segeval/error.h"
#include "segeval/unicode.h"

namespace segeval {

void WriteRules(const MergeRuleTable& table, std::ostream& out) {
  out << kRulesHeader << '\n';
  for (const MergeRule& rule : table.rules()) {
    out << rule.left << ' ' << rule.right << '\n';
  }
}

MergeRuleTable ReadRules(std::istream& in) {
  std::vector<MergeRule> rules;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_number == 1 && line.rfind("#version", 0) == 0) continue;

    const size_t space = line.find(' ');
    const bool well_formed = space != std::string::npos && space > 0 &&
                             space + 1 < line.size() &&
                             line.find(' ', space + 1) == std::string::npos &&
                             line.find('\t') == std::string::npos;
    if (!well_formed) {
      throw Malformed("rules line " + std::to_string(line_number) +
                      ": expected 'left right', got '" + line + "'");
    }
    if (unicode::FindInvalidUtf8(line)) {
      throw Malformed("rules line " + std::to_string(line_number) +
                      ": invalid UTF-8");
    }
    rules.push_back({line.substr(0, space), line.substr(space + 1),
                     static_cast<int>(rules.size())});
  }
  const int count = static_cast<int>(rules.size());
  return MergeRuleTable(std::move(rules), count, kDefaultMinFrequency);
}

MergeRuleTable LoadRulesFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rules file: " + path);
  return ReadRules(in);
}

void SaveRulesFile(const MergeRuleTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write rules file: " + path);
  WriteRules(table, out);
  if (!out) throw IoError("failed writing rules file: " + path);
}

}  // namespace segeval
