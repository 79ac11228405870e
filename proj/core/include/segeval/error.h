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

#ifndef SEGEVAL_ERROR_H_
#define SEGEVAL_ERROR_H_

#include <stdexcept>
#include <string>

namespace segeval {

// Broad failure classes. The command-line front end maps each class to a
// distinct process exit status.
enum class ErrorKind {
  kInvalidArgument,  // precondition violated by the caller
  kMismatch,         // parallel corpora of different sizes
  kMalformed,        // unparsable record, rules line, or invalid UTF-8
  kIo,               // missing or unreadable file
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error InvalidArgument(const std::string& message) {
  return Error(ErrorKind::kInvalidArgument, message);
}
inline Error Mismatch(const std::string& message) {
  return Error(ErrorKind::kMismatch, message);
}
inline Error Malformed(const std::string& message) {
  return Error(ErrorKind::kMalformed, message);
}
inline Error IoError(const std::string& message) {
  return Error(ErrorKind::kIo, message);
}

}  // namespace segeval

#endif  // SEGEVAL_ERROR_H_
