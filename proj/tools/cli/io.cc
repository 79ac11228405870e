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

#include "cli/io.h"

#include <openssl/evp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "segeval/error.h"
#include "segeval/parallel.h"
#include "segeval/unicode.h"

namespace segeval::cli {
namespace {

class InputFile {
 public:
  explicit InputFile(const std::string& path) {
    if (path == kStdStream) {
      stream_ = &std::cin;
      return;
    }
    auto file = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file) throw IoError("cannot open input file: " + path);
    owned_ = std::move(file);
    stream_ = owned_.get();
  }
  std::istream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::istream> owned_;
  std::istream* stream_ = nullptr;
};

bool NextLine(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

void CheckUtf8(const std::string& line, size_t line_number,
               const std::string& path) {
  if (auto offset = unicode::FindInvalidUtf8(line)) {
    throw Malformed(path + ": line " + std::to_string(line_number) +
                    ": invalid UTF-8 at byte " + std::to_string(*offset));
  }
}

std::string Hex(const unsigned char* digest, unsigned int size) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(size * 2);
  for (unsigned int i = 0; i < size; ++i) {
    out.push_back(kDigits[digest[i] >> 4]);
    out.push_back(kDigits[digest[i] & 0xF]);
  }
  return out;
}

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (ctx_ == nullptr || EVP_DigestInit_ex(ctx_, EVP_sha256(), nullptr) != 1) {
      throw IoError("SHA-256 initialisation failed");
    }
  }
  ~Sha256() { EVP_MD_CTX_free(ctx_); }
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void Update(const char* data, size_t size) {
    EVP_DigestUpdate(ctx_, data, size);
  }
  std::string HexDigest() {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int size = 0;
    EVP_DigestFinal_ex(ctx_, digest, &size);
    return Hex(digest, size);
  }

 private:
  EVP_MD_CTX* ctx_;
};

}  // namespace

std::vector<std::string> ReadLines(const std::string& path) {
  InputFile input(path);
  std::vector<std::string> lines;
  std::string line;
  while (NextLine(input.stream(), line)) {
    CheckUtf8(line, lines.size() + 1, path);
    lines.push_back(line);
  }
  return lines;
}

OutputFile::OutputFile(const std::string& path, std::ostream& console)
    : path_(path) {
  if (path == kStdStream) {
    stream_ = &console;
    return;
  }
  owned_ = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*owned_) throw IoError("cannot open output file: " + path);
  stream_ = owned_.get();
}

OutputFile::~OutputFile() {
  if (owned_) owned_->flush();
}

void OutputFile::Close() {
  stream_->flush();
  if (!*stream_) throw IoError("failed writing output file: " + path_);
  owned_.reset();
}

void WriteText(const std::string& path, const std::string& text,
               std::ostream& console) {
  OutputFile out(path, console);
  out.stream() << text;
  out.Close();
}

void TransformLines(
    const std::string& input, const std::string& output, std::ostream& console,
    int threads,
    const std::function<std::string(const std::string&, size_t)>& transform) {
  InputFile in(input);
  OutputFile out(output, console);
  std::vector<std::string> chunk;
  std::vector<std::string> results;
  size_t first_line = 1;
  bool more = true;
  while (more) {
    chunk.clear();
    std::string line;
    while (chunk.size() < kChunkLines && (more = NextLine(in.stream(), line))) {
      CheckUtf8(line, first_line + chunk.size(), input);
      chunk.push_back(std::move(line));
    }
    results.assign(chunk.size(), std::string());
    ParallelFor(chunk.size(), threads, [&](size_t i) {
      results[i] = transform(chunk[i], first_line + i);
    });
    for (const std::string& result : results) out.stream() << result << '\n';
    first_line += chunk.size();
  }
  out.Close();
}

std::string Sha256Hex(const std::string& data) {
  Sha256 hash;
  hash.Update(data.data(), data.size());
  return hash.HexDigest();
}

std::string Sha256File(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);
  Sha256 hash;
  char buffer[1 << 16];
  while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
    hash.Update(buffer, static_cast<size_t>(in.gcount()));
  }
  return hash.HexDigest();
}

}  // namespace segeval::cli
