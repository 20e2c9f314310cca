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

#ifndef PNREPAIR_REGION_HPP_
#define PNREPAIR_REGION_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnrepair/integer.hpp"
#include "pnrepair/lts.hpp"

namespace pnrepair {

/// A region (sup, con, pro) of a host LTS. `sup` is indexed by StateId,
/// `con` and `pro` by EventId of that host.
struct Region {
  std::vector<Integer> sup;
  std::vector<Integer> con;
  std::vector<Integer> pro;

  Integer effect(EventId e) const { return pro[e] - con[e]; }

  friend bool operator==(const Region&, const Region&) = default;
};

class RegionError : public std::runtime_error {
 public:
  enum class Kind { kInconsistentSupport, kNegativeSupport, kConsumeExceedsSupport, kShape };
  RegionError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Completes a region from sup(initial), con and pro by propagating supports
/// breadth-first from the initial state. Throws RegionError when a state is
/// reached with two different supports, a support turns negative, or an edge
/// consumes more than its source holds.
Region expand_region(const Lts& lts, const Integer& initial_support, std::vector<Integer> con,
                     std::vector<Integer> pro);

struct RegionCheck {
  bool ok = true;
  std::optional<Edge> violation;  // first violating edge in canonical order
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Checks both region conditions on every edge (and non-negativity).
RegionCheck is_region(const Lts& lts, const Region& region);

/// sup(start) plus the summed effects along `path`, cross-checked against the
/// region's stored support at the end state. The path must be connected and
/// every edge must exist in `lts`; an empty path starts and ends at `start`.
Integer path_support(const Region& region, const Lts& lts, std::span<const Edge> path,
                     std::optional<StateId> start = std::nullopt);

/// `region sup(ι)=<k>; <event>:<con>/<pro> ...; sup: <state>=<k> ...`
std::string render_region(const Lts& lts, const Region& region);

}  // namespace pnrepair

#endif  // PNREPAIR_REGION_HPP_
