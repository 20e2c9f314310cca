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


#ifndef PNREPAIR_REDUCTIONS_HPP_
#define PNREPAIR_REDUCTIONS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pnrepair/lts.hpp"
#include "pnrepair/removal.hpp"
#include "pnrepair/repair.hpp"

namespace pnrepair {

/// (U, M, lambda). Each set holds indices into `universe`, sorted ascending.
struct HittingSetInstance {
  std::vector<std::string> universe;
  std::vector<std::vector<std::size_t>> sets;
  std::size_t lambda = 0;
};

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `universe X0 X1 ...`, then `set ...` lines (order preserved, elements
/// sorted by universe position), then `lambda <int>`.
HittingSetInstance parse_hitting_set(std::string_view text);
std::string serialize_hitting_set(const HittingSetInstance& h);
HittingSetInstance load_hitting_set(const std::string& path);

bool is_hitting_set(const HittingSetInstance& h, const std::vector<std::size_t>& z);

/// A minimum hitting set: the lexicographically first subset of the smallest
/// size. Requires |U| <= 20 and no empty set in M.
std::vector<std::size_t> brute_force_min_hitting_set(const HittingSetInstance& h);

enum class ReductionFamily { kEdgeLangReal, kEdgeEmb, kEventAll, kStateLangReal, kStateEmb };

std::string family_name(ReductionFamily family);  // edge-lang-real, edge-emb, event, ...
std::optional<ReductionFamily> parse_family(std::string_view name);
RemovalMode family_mode(ReductionFamily family);
/// The implementation relations the family's reduction speaks about.
std::vector<Implementation> family_implementations(ReductionFamily family);

/// Throws ReductionError unless lambda <= |U| and 1 < |M_i| <= |U| for all i.
void check_normal_form(const HittingSetInstance& h);

struct GeneratedInstance {
  Lts lts;
  std::size_t kappa;
};

/// The gadget LTS of the family with kappa = lambda. Universe elements become
/// events; other names are iota, t_i_j_k, d_i_j_k, f_i_k (t_i_j and d_i_j
/// for the event family) and events a, a_l, k_i, u_i_j, v_i, v_i_j, w_i.
GeneratedInstance generate_instance(const HittingSetInstance& h, ReductionFamily family);

/// Edge families drop f_i_0 -X_i-> f_i_1, the event family drops Z itself and
/// state families drop f_i_1, for every X_i in Z.
RemovalSet removal_from_hitting_set(const HittingSetInstance& h, const std::vector<std::size_t>& z,
                                    ReductionFamily family);

/// Reads a hitting set off a removal of the generated LTS: X_i is taken when
/// the removal breaks gadget F_i (or its connector), or, for the event
/// family, when X_i itself is removed. Throws ReductionError if the result is
/// not a hitting set.
std::vector<std::size_t> hitting_set_from_removal(const HittingSetInstance& h, const RemovalSet& removal,
                                                  ReductionFamily family);

std::string render_elements(const HittingSetInstance& h, const std::vector<std::size_t>& z);

}  // namespace pnrepair

#endif  // PNREPAIR_REDUCTIONS_HPP_
