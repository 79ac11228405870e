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

#include "cli/manifest.h"

#include <chrono>
#include <ctime>

#include <nlohmann/json.hpp>

#include "cli/io.h"

namespace segeval::cli {
namespace {

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

std::string DigestOf(const std::string& path) {
  return path == kStdStream ? "" : Sha256File(path);
}

}  // namespace

std::string ToolkitVersion() {
#ifdef SEGEVAL_VERSION
  return SEGEVAL_VERSION;
#else
  return "unknown";
#endif
}

RunManifest::RunManifest(std::string command)
    : command_(std::move(command)), started_at_(UtcNow()) {}

void RunManifest::AddSetting(const std::string& key, const std::string& value) {
  settings_.emplace_back(key, value);
}

void RunManifest::AddInput(const std::string& role, const std::string& path) {
  inputs_.push_back({role, path, DigestOf(path)});
}

void RunManifest::AddOutput(const std::string& role, const std::string& path) {
  outputs_.push_back({role, path, DigestOf(path)});
}

std::string RunManifest::ConfigHash() const {
  nlohmann::json canonical;
  canonical["command"] = command_;
  canonical["settings"] = nlohmann::json::array();
  for (const auto& [key, value] : settings_) {
    canonical["settings"].push_back({key, value});
  }
  return Sha256Hex(canonical.dump());
}

std::string RunManifest::ManifestHash() const {
  nlohmann::json canonical;
  canonical["version"] = ToolkitVersion();
  canonical["config_hash"] = ConfigHash();
  canonical["inputs"] = nlohmann::json::array();
  for (const FileRecord& input : inputs_) {
    canonical["inputs"].push_back({input.role, input.sha256});
  }
  return Sha256Hex(canonical.dump());
}

std::string RunManifest::ToJson() const {
  nlohmann::ordered_json out;
  out["toolkit_version"] = ToolkitVersion();
  out["command"] = command_;
  nlohmann::ordered_json settings = nlohmann::ordered_json::object();
  for (const auto& [key, value] : settings_) settings[key] = value;
  out["settings"] = settings;
  out["config_hash"] = ConfigHash();
  auto files = [](const std::vector<FileRecord>& records) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const FileRecord& r : records) {
      list.push_back({{"role", r.role}, {"path", r.path}, {"sha256", r.sha256}});
    }
    return list;
  };
  out["inputs"] = files(inputs_);
  out["outputs"] = files(outputs_);
  out["started_at"] = started_at_;
  out["finished_at"] = UtcNow();
  out["manifest_hash"] = ManifestHash();
  return out.dump(2) + "\n";
}

}  // namespace segeval::cli
