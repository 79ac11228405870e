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

#include "segeval/prob_log.h"

#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "segeval/error.h"

namespace segeval {

TokenProbabilities ParseProbabilityRecord(std::string_view line,
                                          size_t record_number) {
  auto fail = [record_number](const std::string& what) {
    return Malformed("record " + std::to_string(record_number) + ": " + what);
  };
  nlohmann::json object;
  try {
    object = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw fail(std::string("invalid JSON (") + e.what() + ")");
  }
  if (!object.is_object()) throw fail("expected a JSON object");
  const auto id = object.find("id");
  const auto tokens = object.find("tokens");
  const auto probs = object.find("probs");
  if (id == object.end() || !id->is_number_integer()) {
    throw fail("missing integer field 'id'");
  }
  if (tokens == object.end() || !tokens->is_array()) {
    throw fail("missing array field 'tokens'");
  }
  if (probs == object.end() || !probs->is_array()) {
    throw fail("missing array field 'probs'");
  }
  if (tokens->size() != probs->size()) {
    throw fail("'tokens' has " + std::to_string(tokens->size()) +
               " entries but 'probs' has " + std::to_string(probs->size()));
  }

  TokenProbabilities record;
  record.id = id->get<int64_t>();
  record.tokens.reserve(tokens->size());
  record.probs.reserve(probs->size());
  for (const auto& token : *tokens) {
    if (!token.is_string()) throw fail("'tokens' must hold strings");
    record.tokens.push_back(token.get<std::string>());
  }
  for (size_t i = 0; i < probs->size(); ++i) {
    const auto& p = (*probs)[i];
    if (!p.is_number()) throw fail("'probs' must hold numbers");
    const double value = p.get<double>();
    if (!(value >= 0.0 && value <= 1.0)) {
      throw fail("sentence " + std::to_string(record.id) + ", position " +
                 std::to_string(i) + ": probability outside [0, 1]");
    }
    record.probs.push_back(value);
  }
  return record;
}

std::vector<TokenProbabilities> ReadProbabilityLog(std::istream& in) {
  std::vector<TokenProbabilities> log;
  std::string line;
  size_t record_number = 0;
  while (std::getline(in, line)) {
    ++record_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    log.push_back(ParseProbabilityRecord(line, record_number));
  }
  return log;
}

void WriteProbabilityRecord(const TokenProbabilities& record,
                            std::ostream& out) {
  nlohmann::json object;
  object["id"] = record.id;
  object["tokens"] = record.tokens;
  object["probs"] = record.probs;
  out << object.dump() << '\n';
}

}  // namespace segeval
