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

#ifndef SEGEVAL_TOOLS_CLI_IO_H_
#define SEGEVAL_TOOLS_CLI_IO_H_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace segeval::cli {

// "-" stands for stdin / stdout.
inline constexpr char kStdStream[] = "-";

// Reads every line (LF separated, trailing CR dropped). Throws IoError for
// missing files and Malformed, with the 1-based line number, for invalid
// UTF-8.
std::vector<std::string> ReadLines(const std::string& path);

// Owns a file stream, or refers to `console` when the path is "-".
class OutputFile {
 public:
  OutputFile(const std::string& path, std::ostream& console);
  ~OutputFile();
  std::ostream& stream() { return *stream_; }
  void Close();

 private:
  std::string path_;
  std::unique_ptr<std::ostream> owned_;
  std::ostream* stream_;
};

void WriteText(const std::string& path, const std::string& text,
               std::ostream& console);

// Line-to-line transform over a stream in fixed-size chunks. Each chunk is
// processed by up to `threads` workers and written in input order, so memory
// stays proportional to the chunk size and the output does not depend on
// the thread count. `transform` receives the 1-based line number.
void TransformLines(
    const std::string& input, const std::string& output, std::ostream& console,
    int threads,
    const std::function<std::string(const std::string&, size_t)>& transform);

inline constexpr size_t kChunkLines = 4096;

// Lowercase hex SHA-256.
std::string Sha256Hex(const std::string& data);
std::string Sha256File(const std::string& path);

}  // namespace segeval::cli

#endif  // SEGEVAL_TOOLS_CLI_IO_H_
