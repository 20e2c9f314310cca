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

#ifndef PNREPAIR_CONE_SIMPLEX_HPP_
#define PNREPAIR_CONE_SIMPLEX_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pnrepair/integer.hpp"

namespace pnrepair {

/// Exact feasibility over a polyhedral cone
///
///   C = { x >= 0 : A_eq x = 0, A_ge x >= 0 }
///
/// asking whether some x in C has objective(x) > 0. Since every constraint is
/// homogeneous, such an x exists iff the maximum of the objective over C is
/// unbounded; the origin is always feasible, so the primal simplex starts
/// there without a phase-one problem. All ratio tests tie at zero and Bland's
/// rule guarantees termination.
///
/// The dictionary is kept fraction-free: entries are integers over one common
/// positive denominator and every pivot divides exactly by the previous
/// denominator. No floating point is involved anywhere.
class ConeSimplex {
 public:
  explicit ConeSimplex(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  void add_equality(std::vector<Integer> coeffs);
  void add_inequality(std::vector<Integer> coeffs);

  /// Eliminates the equalities once; the resulting dictionary is shared by
  /// every later objective. Must precede find_positive_ray.
  void prepare();
  bool prepared() const { return prepared_; }

  /// A primitive integer point x of C with objective(x) >= 1, or nullopt if
  /// objective(x) <= 0 on all of C. Works on a private copy of the prepared
  /// dictionary, so concurrent calls are safe.
  std::optional<std::vector<Integer>> find_positive_ray(std::span<const Integer> objective) const;

  /// Pivots performed by the most recent find_positive_ray on this thread.
  static std::size_t last_pivot_count();

 private:
  static constexpr std::size_t kObjective = static_cast<std::size_t>(-1);

  struct Dictionary {
    std::size_t cols = 0;
    std::vector<Integer> cells;            // rows x cols, row-major
    std::vector<std::size_t> row_var;      // basic variable of each row; kObjective for z
    std::vector<std::size_t> col_var;      // nonbasic variable of each column
    Integer denom = 1;

    Integer& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
    std::size_t rows() const { return row_var.size(); }
    void pivot(std::size_t r, std::size_t s);
    void erase_column(std::size_t c);
    void erase_row(std::size_t r);
  };

  std::size_t num_vars_;
  std::vector<std::vector<Integer>> equalities_;
  std::vector<std::vector<Integer>> inequalities_;
  bool prepared_ = false;
  Dictionary base_;
};

}  // namespace pnrepair

#endif  // PNREPAIR_CONE_SIMPLEX_HPP_
