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

#ifndef SEGEVAL_TOOLS_CLI_MANIFEST_H_
#define SEGEVAL_TOOLS_CLI_MANIFEST_H_

#include <string>
#include <utility>
#include <vector>

namespace segeval::cli {

// Reproducibility record of one command invocation.
//
// The config hash covers the command name and every setting that can change
// results; thread counts and output locations are excluded. The manifest hash
// covers the toolkit version, the config hash and the input digests in
// order, so identical settings and input bytes give identical hashes no
// matter where or when the command ran.
class RunManifest {
 public:
  explicit RunManifest(std::string command);

  void AddSetting(const std::string& key, const std::string& value);
  // Hashes the file now; "-" (stdin) is recorded without a digest.
  void AddInput(const std::string& role, const std::string& path);
  void AddOutput(const std::string& role, const std::string& path);

  const std::string& command() const { return command_; }
  std::string ConfigHash() const;
  std::string ManifestHash() const;

  // Pretty-printed JSON with timestamps.
  std::string ToJson() const;

 private:
  struct FileRecord {
    std::string role;
    std::string path;
    std::string sha256;
  };

  std::string command_;
  std::vector<std::pair<std::string, std::string>> settings_;
  std::vector<FileRecord> inputs_;
  std::vector<FileRecord> outputs_;
  std::string started_at_;
};

std::string ToolkitVersion();

}  // namespace segeval::cli

#endif  // SEGEVAL_TOOLS_CLI_MANIFEST_H_
