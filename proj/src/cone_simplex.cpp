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

#include "pnrepair/cone_simplex.hpp"

#include <limits>
#include <stdexcept>

namespace pnrepair {
namespace {

thread_local std::size_t g_last_pivots = 0;

// (a*p - b*c) / d, negated if `negate`. The division is exact for every
// entry of a fraction-free dictionary.
Integer bareiss_update(const Integer& a, const Integer& p, const Integer& b, const Integer& c,
                       const Integer& d, bool negate) {
  if (a.is_small() && p.is_small() && b.is_small() && c.is_small() && d.is_small()) {
    __int128 num = static_cast<__int128>(a.small_value()) * p.small_value() -
                   static_cast<__int128>(b.small_value()) * c.small_value();
    __int128 den = d.small_value();
    if (num % den != 0) throw std::logic_error("fraction-free pivot lost exactness");
    __int128 q = num / den;
    if (negate) q = -q;
    if (q >= std::numeric_limits<std::int64_t>::min() &&
        q <= std::numeric_limits<std::int64_t>::max()) {
      return Integer(static_cast<std::int64_t>(q));
    }
  }
  Integer q = divide_exact(a * p - b * c, d);
  return negate ? -q : q;
}

}  // namespace

void ConeSimplex::add_equality(std::vector<Integer> coeffs) {
  if (coeffs.size() != num_vars_) throw std::invalid_argument("equality has wrong arity");
  if (prepared_) throw std::logic_error("cannot add constraints after prepare()");
  equalities_.push_back(std::move(coeffs));
}

void ConeSimplex::add_inequality(std::vector<Integer> coeffs) {
  if (coeffs.size() != num_vars_) throw std::invalid_argument("inequality has wrong arity");
  if (prepared_) throw std::logic_error("cannot add constraints after prepare()");
  inequalities_.push_back(std::move(coeffs));
}

std::size_t ConeSimplex::last_pivot_count() { return g_last_pivots; }

void ConeSimplex::Dictionary::pivot(std::size_t r, std::size_t s) {
  const Integer p = at(r, s);
  const bool negate = p.sign() < 0;
  const std::size_t n_rows = rows();
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (i == r) continue;
    const Integer b = at(i, s);
    for (std::size_t j = 0; j < cols; ++j) {
      if (j == s) continue;
      Integer& a = at(i, j);
      if (b.is_zero() && a.is_zero()) continue;
      a = bareiss_update(a, p, b, at(r, j), denom, negate);
    }
    at(i, s) = negate ? -b : b;
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (j != s && !negate) at(r, j) = -at(r, j);
  }
  at(r, s) = negate ? -denom : denom;
  std::swap(row_var[r], col_var[s]);
  denom = negate ? -p : p;
}

void ConeSimplex::Dictionary::erase_column(std::size_t c) {
  std::vector<Integer> next;
  next.reserve(rows() * (cols - 1));
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j != c) next.push_back(at(i, j));
    }
  }
  cells = std::move(next);
  col_var.erase(col_var.begin() + static_cast<std::ptrdiff_t>(c));
  --cols;
}

void ConeSimplex::Dictionary::erase_row(std::size_t r) {
  auto first = cells.begin() + static_cast<std::ptrdiff_t>(r * cols);
  cells.erase(first, first + static_cast<std::ptrdiff_t>(cols));
  row_var.erase(row_var.begin() + static_cast<std::ptrdiff_t>(r));
}

void ConeSimplex::prepare() {
  if (prepared_) return;
  Dictionary d;
  d.cols = num_vars_;
  for (std::size_t v = 0; v < num_vars_; ++v) d.col_var.push_back(v);
  std::vector<bool> is_equality;
  std::size_t slack = num_vars_;
  for (auto* group : {&equalities_, &inequalities_}) {
    for (const auto& row : *group) {
      d.cells.insert(d.cells.end(), row.begin(), row.end());
      d.row_var.push_back(slack++);
      is_equality.push_back(group == &equalities_);
    }
  }

  // Pivot each equality slack out of the basis and drop its column, which
  // pins it at zero. All-zero equality rows are redundant.
  std::size_t i = 0;
  while (i < d.rows()) {
    if (!is_equality[i]) {
      ++i;
      continue;
    }
    std::size_t best = d.cols;
    for (std::size_t j = 0; j < d.cols; ++j) {
      if (!d.at(i, j).is_zero() && (best == d.cols || d.col_var[j] < d.col_var[best])) best = j;
    }
    if (best == d.cols) {
      d.erase_row(i);
      is_equality.erase(is_equality.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    d.pivot(i, best);
    d.erase_column(best);
    is_equality[i] = false;
    ++i;
  }
  base_ = std::move(d);
  prepared_ = true;
  equalities_.clear();
  inequalities_.clear();
}

std::optional<std::vector<Integer>> ConeSimplex::find_positive_ray(
    std::span<const Integer> objective) const {
  if (!prepared_) throw std::logic_error("ConeSimplex::prepare() has not been called");
  if (objective.size() != num_vars_) throw std::invalid_argument("objective has wrong arity");

  Dictionary d = base_;
  std::vector<Integer> z(d.cols);
  for (std::size_t j = 0; j < d.cols; ++j) {
    if (d.col_var[j] < num_vars_) z[j] = objective[d.col_var[j]] * d.denom;
  }
  for (std::size_t r = 0; r < d.rows(); ++r) {
    std::size_t v = d.row_var[r];
    if (v >= num_vars_ || objective[v].is_zero()) continue;
    for (std::size_t j = 0; j < d.cols; ++j) z[j] += objective[v] * d.at(r, j);
  }
  d.cells.insert(d.cells.end(), z.begin(), z.end());
  d.row_var.push_back(kObjective);
  const std::size_t zr = d.rows() - 1;

  std::size_t pivots = 0;
  for (;;) {
    // Bland: lowest-indexed improving column, then lowest-indexed blocking row.
    std::size_t s = d.cols;
    for (std::size_t j = 0; j < d.cols; ++j) {
      if (d.at(zr, j).sign() > 0 && (s == d.cols || d.col_var[j] < d.col_var[s])) s = j;
    }
    if (s == d.cols) {
      g_last_pivots = pivots;
      return std::nullopt;
    }
    std::size_t r = zr;
    for (std::size_t i = 0; i < zr; ++i) {
      if (d.at(i, s).sign() < 0 && (r == zr || d.row_var[i] < d.row_var[r])) r = i;
    }
    if (r == zr) break;
    d.pivot(r, s);
    ++pivots;
  }
  g_last_pivots = pivots;

  // Unbounded direction: raise column s by denom; basics move by their
  // (non-negative) column-s entries.
  std::size_t s = d.cols;
  for (std::size_t j = 0; j < d.cols; ++j) {
    if (d.at(zr, j).sign() > 0 && (s == d.cols || d.col_var[j] < d.col_var[s])) s = j;
  }
  std::vector<Integer> x(num_vars_);
  if (d.col_var[s] < num_vars_) x[d.col_var[s]] = d.denom;
  for (std::size_t i = 0; i < zr; ++i) {
    if (d.row_var[i] < num_vars_) x[d.row_var[i]] = d.at(i, s);
  }
  Integer g;
  for (const Integer& v : x) g = gcd(g, v);
  if (g.sign() > 0) {
    for (Integer& v : x) v = divide_exact(v, g);
  }
  Integer value;
  for (std::size_t v = 0; v < num_vars_; ++v) value += objective[v] * x[v];
  if (value.sign() <= 0) throw std::logic_error("cone simplex produced a non-improving ray");
  return x;
}

}  // namespace pnrepair
