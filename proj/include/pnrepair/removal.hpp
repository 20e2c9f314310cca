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


#ifndef PNREPAIR_REMOVAL_HPP_
#define PNREPAIR_REMOVAL_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pnrepair/lts.hpp"

namespace pnrepair {

enum class RemovalMode { kEdge, kEvent, kState };

std::string mode_name(RemovalMode mode);
std::optional<RemovalMode> parse_mode(std::string_view name);

/// Removed components, by name. Only the member matching `mode` is used.
struct RemovalSet {
  RemovalMode mode = RemovalMode::kEdge;
  std::vector<NamedEdge> edges = {};
  std::vector<std::string> events = {};
  std::vector<std::string> states = {};

  std::size_t size() const;
  /// Sorts and deduplicates the active member.
  void normalize();

  friend bool operator==(const RemovalSet&, const RemovalSet&) = default;
};

class RemovalError : public std::runtime_error {
 public:
  enum class Kind {
    kUnknownComponent,  // names something absent from the LTS
    kClosure,           // kept edges left unreachable
    kUnreachable,       // surviving state unreachable (state removal)
    kInitialRemoved,
    kFormat,
  };
  RemovalError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// B = (reachable part of) A without the edges of K. Every edge of A left
/// stranded by unreachability must itself be listed in K.
Lts apply_edge_removal(const Lts& a, std::span<const NamedEdge> removed);
/// Drops every edge labelled by a removed event. No kept edge may become
/// unreachable; states left without edges and unreachable disappear.
Lts apply_event_removal(const Lts& a, std::span<const std::string> removed);
/// Induced sub-LTS on S minus the removed states, which must stay reachable
/// and keep the initial state.
Lts apply_state_removal(const Lts& a, std::span<const std::string> removed);

Lts apply_removal(const Lts& a, const RemovalSet& removal);
/// As apply_removal, but invalid removals yield nullopt instead of throwing.
std::optional<Lts> try_apply_removal(const Lts& a, const RemovalSet& removal);

/// The edges of A missing from B, in A's canonical order (the induced edge
/// removal of an event or state removal).
std::vector<NamedEdge> induced_edge_removal(const Lts& a, const Lts& b);

/// Lines `remove edge <s> <e> <s'>`, `remove event <e>` or `remove state <s>`;
/// a file uses a single mode. An empty file parses as an empty edge removal
/// unless `fallback` says otherwise.
RemovalSet parse_removal(std::string_view text, RemovalMode fallback = RemovalMode::kEdge);
std::string serialize_removal(const RemovalSet& removal);
RemovalSet load_removal(const std::string& path, RemovalMode fallback = RemovalMode::kEdge);

}  // namespace pnrepair

#endif  // PNREPAIR_REMOVAL_HPP_
