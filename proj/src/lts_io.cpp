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

#include <fstream>
#include <sstream>

#include "pnrepair/lts.hpp"
#include "pnrepair/text_format.hpp"

namespace pnrepair {

Lts parse_lts(std::string_view text) {
  std::optional<std::string> name;
  std::optional<std::string> initial;
  std::vector<NamedEdge> edges;

  for (const TextLine& line : tokenize_lines(text)) {
    const auto& tok = line.tokens;
    auto fail = [&](std::size_t index, const std::string& message) -> LtsError {
      int column = index < tok.size() ? tok[index].column : line.end_column;
      return LtsError(LtsError::Kind::kSyntax, message, line.number, column);
    };
    if (!name) {
      if (tok[0].text != "lts") throw fail(0, "expected 'lts <name>' header");
      if (tok.size() != 2) throw fail(tok.size() < 2 ? 1 : 2, "expected 'lts <name>'");
      name = tok[1].text;
      continue;
    }
    if (!initial) {
      if (tok[0].text != "initial") {
        throw LtsError(LtsError::Kind::kMissingInitial,
                       "expected 'initial <state>' after the header", line.number, tok[0].column);
      }
      if (tok.size() != 2) throw fail(tok.size() < 2 ? 1 : 2, "expected 'initial <state>'");
      initial = tok[1].text;
      continue;
    }
    if (tok.size() != 3) {
      throw fail(tok.size() < 3 ? tok.size() : 3, "expected '<source> <event> <target>'");
    }
    edges.push_back({tok[0].text, tok[1].text, tok[2].text});
  }
  if (!name) throw LtsError(LtsError::Kind::kSyntax, "empty document: missing 'lts <name>'");
  if (!initial) throw LtsError(LtsError::Kind::kMissingInitial, "missing 'initial <state>'");
  return Lts::build(*name, *initial, std::move(edges));
}

std::string serialize_lts(const Lts& lts) {
  std::ostringstream out;
  out << "lts " << lts.name() << "\n";
  out << "initial " << lts.state_name(lts.initial()) << "\n";
  for (const Edge& e : lts.edges()) {
    out << lts.state_name(e.source) << ' ' << lts.event_name(e.event) << ' '
        << lts.state_name(e.target) << "\n";
  }
  return out.str();
}

Lts load_lts(const std::string& path) { return parse_lts(read_text_file(path)); }

}  // namespace pnrepair
