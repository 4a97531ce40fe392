// Copyright 2026 The Actol Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace actol {

// Error in a source artifact (program text, predicate file, ranking file,
// constraint file). Carries a 1-based position when one is known.
class SourceError : public std::runtime_error {
 public:
  SourceError(std::string file, int line, int column, const std::string& message)
      : std::runtime_error(format(file, line, column, message)),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  explicit SourceError(const std::string& message) : SourceError("", 0, 0, message) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& file, int line, int column,
                            const std::string& message) {
    std::string out;
    if (!file.empty()) out += file + ":";
    if (line > 0) {
      out += std::to_string(line) + ":" + std::to_string(column) + ":";
    }
    if (!out.empty()) out += " ";
    return out + message;
  }

  std::string file_;
  int line_;
  int column_;
};

// Request that cannot be served on this input (irreducible control flow,
// preset/width mismatch, refused extraction, ...).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace actol
