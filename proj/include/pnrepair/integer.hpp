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

#ifndef PNREPAIR_INTEGER_HPP_
#define PNREPAIR_INTEGER_HPP_

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pnrepair {

/// Arbitrary-precision signed integer.
///
/// Values that fit in an int64 are stored inline and combined with
/// overflow-checked machine arithmetic; anything larger is promoted to a
/// shared, immutable GMP integer. Results are always renormalized, so two
/// equal values have the same representation.
class Integer {
 public:
  Integer() = default;
  template <std::signed_integral T>
  Integer(T value) : small_(static_cast<std::int64_t>(value)) {}  // NOLINT
  explicit Integer(const mpz_class& value);

  /// Parses an optionally signed decimal literal. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  bool is_small() const { return big_ == nullptr; }
  std::int64_t small_value() const { return small_; }
  mpz_class to_mpz() const;
  std::string to_string() const;

  int sign() const;
  bool is_zero() const { return big_ == nullptr && small_ == 0; }

  Integer operator-() const;
  Integer& operator+=(const Integer& rhs) { return *this = *this + rhs; }
  Integer& operator-=(const Integer& rhs) { return *this = *this - rhs; }
  Integer& operator*=(const Integer& rhs) { return *this = *this * rhs; }

  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);
  /// Truncating division (rounds toward zero). Throws on division by zero.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  friend std::ostream& operator<<(std::ostream& os, const Integer& value);

 private:
  std::int64_t small_ = 0;
  std::shared_ptr<const mpz_class> big_;
};

Integer abs(const Integer& value);
/// Non-negative greatest common divisor; gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);
/// Exact division; throws std::logic_error if `b` does not divide `a`.
Integer divide_exact(const Integer& a, const Integer& b);

}  // namespace pnrepair

#endif  // PNREPAIR_INTEGER_HPP_
