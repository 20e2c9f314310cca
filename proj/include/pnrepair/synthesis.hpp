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


#ifndef PNREPAIR_SYNTHESIS_HPP_
#define PNREPAIR_SYNTHESIS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pnrepair/integer.hpp"
#include "pnrepair/lts.hpp"
#include "pnrepair/separation.hpp"

namespace pnrepair {

/// Token counts in place order.
using Marking = std::vector<Integer>;

/// Weighted place/transition net. Places keep their declaration order, which
/// is also the order of marking vectors; transitions are sorted by name.
struct PetriNet {
  std::string name;
  std::vector<std::string> places;
  std::vector<std::string> transitions;
  std::vector<std::vector<Integer>> consume;  // [place][transition] = f(p, t)
  std::vector<std::vector<Integer>> produce;  // [place][transition] = f(t, p)
  Marking initial_marking;

  std::optional<std::size_t> find_place(std::string_view id) const;
  std::optional<std::size_t> find_transition(std::string_view id) const;
  bool enabled(const Marking& m, std::size_t t) const;
  /// Throws std::logic_error if t is not enabled at m.
  Marking fire(const Marking& m, std::size_t t) const;
};

class NetError : public std::runtime_error {
 public:
  enum class Kind { kFormat, kMismatch };
  NetError(Kind kind, const std::string& message, int line = 0);
  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// One place per region: f(R, e) = con(e), f(e, R) = pro(e), M0(R) = sup(initial).
/// Places are named R0, R1, ... (primed if that collides with an event).
/// Throws NetError(kMismatch) if a region does not fit the LTS.
PetriNet synthesized_net(const Lts& lts, const Witness& witness, std::string name = "N");

/// `(c1,c2,...)`, or `()` for the place-free net.
std::string render_marking(const Marking& m);

struct ReachabilityResult {
  std::optional<Lts> graph;   // set unless the cap was exceeded
  std::size_t markings = 0;   // markings discovered (partial count when capped)
  bool cap_exceeded() const { return !graph.has_value(); }
};

/// Breadth-first exploration from M0, firing transitions in name order.
/// States are named by render_marking. Stops once more than `cap` markings
/// have been discovered.
ReachabilityResult reachability_graph(const PetriNet& net, std::size_t cap);

struct VerifyReport {
  bool ok = false;
  std::string failure;                      // first violated condition
  std::vector<Marking> phi;                 // per state of A, when computed
  std::vector<SeparationAtom> undetected;   // language simulation: (e, s) with phi(s) enabling e
};

/// phi is obtained by firing N along the breadth-first tree of A starting
/// from M0, which is the marking vector of supports when N was synthesized
/// from regions of A. Every edge of A must then fire consistently and phi
/// must be injective. Throws NetError(kMismatch) unless the transitions of N
/// are exactly the events of A.
VerifyReport verify_embedding(const Lts& lts, const PetriNet& net);
/// Simulation plus: phi(s) does not enable e whenever e does not occur at s.
/// All offending (e, s) pairs are listed.
VerifyReport verify_language_simulation(const Lts& lts, const PetriNet& net);
/// Isomorphism between A and the reachability graph, explored up to |S_A|
/// markings.
VerifyReport verify_realization(const Lts& lts, const PetriNet& net);

/// Net text format: `net <name>`, `place <id> <tokens>`, `transition <id>`,
/// `arc <place> <transition> <w>` (consume), `arc <transition> <place> <w>`
/// (produce). Identifiers are declared before arcs use them.
PetriNet parse_net(std::string_view text);
std::string serialize_net(const PetriNet& net);
PetriNet load_net(const std::string& path);

}  // namespace pnrepair

#endif  // PNREPAIR_SYNTHESIS_HPP_
