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

#include "pnrepair/region.hpp"

#include <sstream>

namespace pnrepair {
namespace {

void check_shape(const Lts& lts, const Region& region) {
  if (region.sup.size() != lts.num_states() || region.con.size() != lts.num_events() ||
      region.pro.size() != lts.num_events()) {
    throw RegionError(RegionError::Kind::kShape, "region does not match the LTS dimensions");
  }
}

}  // namespace

Region expand_region(const Lts& lts, const Integer& initial_support, std::vector<Integer> con,
                     std::vector<Integer> pro) {
  if (con.size() != lts.num_events() || pro.size() != lts.num_events()) {
    throw RegionError(RegionError::Kind::kShape, "con/pro must be defined on every event");
  }
  for (EventId e = 0; e < lts.num_events(); ++e) {
    if (con[e].sign() < 0 || pro[e].sign() < 0) {
      throw RegionError(RegionError::Kind::kNegativeSupport,
                        "negative con/pro for event '" + lts.event_name(e) + "'");
    }
  }
  if (initial_support.sign() < 0) {
    throw RegionError(RegionError::Kind::kNegativeSupport, "negative initial support");
  }

  Region region;
  region.sup.assign(lts.num_states(), Integer());
  region.con = std::move(con);
  region.pro = std::move(pro);
  std::vector<bool> assigned(lts.num_states(), false);
  region.sup[lts.initial()] = initial_support;
  assigned[lts.initial()] = true;

  // bfs_order visits every source before its tree children, so each edge is
  // examined once its source support is known.
  for (StateId s : lts.bfs_order()) {
    for (const Edge& e : lts.out_edges(s)) {
      const Integer& here = region.sup[s];
      if (region.con[e.event] > here) {
        throw RegionError(RegionError::Kind::kConsumeExceedsSupport,
                          "con(" + lts.event_name(e.event) + ")=" +
                              region.con[e.event].to_string() + " exceeds sup(" +
                              lts.state_name(s) + ")=" + here.to_string());
      }
      Integer next = here - region.con[e.event] + region.pro[e.event];
      if (next.sign() < 0) {
        throw RegionError(RegionError::Kind::kNegativeSupport,
                          "negative support at '" + lts.state_name(e.target) + "'");
      }
      if (!assigned[e.target]) {
        region.sup[e.target] = next;
        assigned[e.target] = true;
      } else if (region.sup[e.target] != next) {
        throw RegionError(RegionError::Kind::kInconsistentSupport,
                          "inconsistent support at '" + lts.state_name(e.target) + "': " +
                              region.sup[e.target].to_string() + " vs " + next.to_string());
      }
    }
  }
  return region;
}

RegionCheck is_region(const Lts& lts, const Region& region) {
  check_shape(lts, region);
  RegionCheck check;
  for (StateId s = 0; s < lts.num_states(); ++s) {
    if (region.sup[s].sign() < 0) {
      check.ok = false;
      check.reason = "negative support at '" + lts.state_name(s) + "'";
      return check;
    }
  }
  for (EventId e = 0; e < lts.num_events(); ++e) {
    if (region.con[e].sign() < 0 || region.pro[e].sign() < 0) {
      check.ok = false;
      check.reason = "negative con/pro for '" + lts.event_name(e) + "'";
      return check;
    }
  }
  for (const Edge& e : lts.edges()) {
    const Integer& before = region.sup[e.source];
    if (region.con[e.event] > before) {
      check.ok = false;
      check.violation = e;
      check.reason = "con exceeds support";
      return check;
    }
    if (region.sup[e.target] != before - region.con[e.event] + region.pro[e.event]) {
      check.ok = false;
      check.violation = e;
      check.reason = "support update violated";
      return check;
    }
  }
  return check;
}

Integer path_support(const Region& region, const Lts& lts, std::span<const Edge> path,
                     std::optional<StateId> start) {
  check_shape(lts, region);
  StateId at = start.value_or(path.empty() ? lts.initial() : path.front().source);
  Integer support = region.sup[at];
  for (const Edge& e : path) {
    if (e.source != at) throw std::invalid_argument("path is not connected");
    if (e.source >= lts.num_states() || e.event >= lts.num_events() ||
        lts.successor(e.source, e.event) != std::optional<StateId>(e.target)) {
      throw std::invalid_argument("path uses an edge absent from the LTS");
    }
    support += region.effect(e.event);
    at = e.target;
  }
  if (support != region.sup[at]) {
    throw std::logic_error("summed effects disagree with the stored support at '" +
                           lts.state_name(at) + "'");
  }
  return support;
}

std::string render_region(const Lts& lts, const Region& region) {
  std::ostringstream out;
  out << "region sup(\xCE\xB9)=" << region.sup[lts.initial()] << ";";
  for (EventId e = 0; e < lts.num_events(); ++e) {
    out << ' ' << lts.event_name(e) << ':' << region.con[e] << '/' << region.pro[e];
  }
  out << "; sup:";
  for (StateId s = 0; s < lts.num_states(); ++s) {
    out << ' ' << lts.state_name(s) << '=' << region.sup[s];
  }
  return out.str();
}

}  // namespace pnrepair
