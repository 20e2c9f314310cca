// Copyright 2026 The pnrepair Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared tokenizer for the line-oriented text formats (LTS, net, removal,
// hitting set).

#ifndef PNREPAIR_TEXT_FORMAT_HPP_
#define PNREPAIR_TEXT_FORMAT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pnrepair {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

/// A non-empty line after comment stripping.
struct TextLine {
  int number = 0;  // 1-based
  std::vector<Token> tokens;
  int end_column = 0;
};

/// Splits text into whitespace-separated tokens per line. A token starting
/// with '#' drops itself and the rest of the line; lines left without tokens
/// are skipped.
std::vector<TextLine> tokenize_lines(std::string_view text);

/// Generic format error carrying a 1-based line number (0 if unknown).
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& message, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace pnrepair

#endif  // PNREPAIR_TEXT_FORMAT_HPP_
