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

#include "pnrepair/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace pnrepair {
namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

Integer from_mpz(const mpz_class& value) { return Integer(value); }

}  // namespace

Integer::Integer(const mpz_class& value) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (mpz_fits_slong_p(value.get_mpz_t())) {
    small_ = value.get_si();
  } else {
    big_ = std::make_shared<const mpz_class>(value);
  }
}

Integer Integer::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return from_mpz(mpz_class(digits, 10));
}

mpz_class Integer::to_mpz() const {
  if (big_) return *big_;
  mpz_class out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(small_));
  return out;
}

std::string Integer::to_string() const {
  if (big_) return big_->get_str();
  return std::to_string(small_);
}

int Integer::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

Integer Integer::operator-() const {
  if (big_ || small_ == kMin) return from_mpz(-to_mpz());
  return Integer(-small_);
}

Integer operator+(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t out;
    if (!__builtin_add_overflow(a.small_, b.small_, &out)) return Integer(out);
  }
  return from_mpz(a.to_mpz() + b.to_mpz());
}

Integer operator-(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t out;
    if (!__builtin_sub_overflow(a.small_, b.small_, &out)) return Integer(out);
  }
  return from_mpz(a.to_mpz() - b.to_mpz());
}

Integer operator*(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    std::int64_t out;
    if (!__builtin_mul_overflow(a.small_, b.small_, &out)) return Integer(out);
  }
  return from_mpz(a.to_mpz() * b.to_mpz());
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == kMin && b.small_ == -1)) {
    return Integer(a.small_ / b.small_);
  }
  mpz_class q;
  mpz_class na = a.to_mpz();
  mpz_class nb = b.to_mpz();
  mpz_tdiv_q(q.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
  return from_mpz(q);
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return Integer(0);
    return Integer(a.small_ % b.small_);
  }
  mpz_class r;
  mpz_class na = a.to_mpz();
  mpz_class nb = b.to_mpz();
  mpz_tdiv_r(r.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
  return from_mpz(r);
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never equals a small one
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = cmp(a.to_mpz(), b.to_mpz());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Integer& value) {
  return os << value.to_string();
}

Integer abs(const Integer& value) { return value.sign() < 0 ? -value : value; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small_value() != kMin && b.small_value() != kMin) {
    std::int64_t x = a.small_value() < 0 ? -a.small_value() : a.small_value();
    std::int64_t y = b.small_value() < 0 ? -b.small_value() : b.small_value();
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_class na = a.to_mpz();
  mpz_class nb = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
  return from_mpz(g);
}

Integer divide_exact(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && b.small_value() != 0 &&
      !(a.small_value() == kMin && b.small_value() == -1)) {
    if (a.small_value() % b.small_value() != 0) {
      throw std::logic_error("inexact division " + a.to_string() + " / " + b.to_string());
    }
    return Integer(a.small_value() / b.small_value());
  }
  if (!(a % b).is_zero()) {
    throw std::logic_error("inexact division " + a.to_string() + " / " + b.to_string());
  }
  return a / b;
}

}  // namespace pnrepair
