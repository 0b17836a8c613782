// Copyright 2026 The treedist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "treedist/rational.h"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace treedist {
namespace {

std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("rational multiplication overflow");
  }
  return out;
}

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("rational addition overflow");
  }
  return out;
}

std::optional<std::int64_t> ParseInt(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::Floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::Parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = ParseInt(text.substr(0, slash));
    auto den = ParseInt(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    auto value = ParseInt(text);
    if (!value) return std::nullopt;
    return Rational(*value);
  }
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 15) return std::nullopt;
  for (char c : frac) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  bool negative = false;
  std::string_view digits = whole;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  std::int64_t int_part = 0;
  if (!digits.empty()) {
    auto parsed = ParseInt(digits);
    if (!parsed || *parsed < 0 || digits.front() == '+') return std::nullopt;
    int_part = *parsed;
  }
  std::int64_t scale = 1;
  for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
  auto frac_value = ParseInt(frac);
  if (!frac_value) return std::nullopt;
  std::int64_t num = CheckedAdd(CheckedMul(int_part, scale), *frac_value);
  return Rational(negative ? -num : num, scale);
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t den = CheckedMul(a.den_ / g, b.den_);
  return Rational(CheckedAdd(CheckedMul(a.num_, b.den_ / g),
                             CheckedMul(b.num_, a.den_ / g)),
                  den);
}

Rational Rational::operator-() const {
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  return Rational(CheckedMul(a.num_ / (g1 ? g1 : 1), b.num_ / (g2 ? g2 : 1)),
                  CheckedMul(a.den_ / (g2 ? g2 : 1), b.den_ / (g1 ? g1 : 1)));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t Lcm(std::int64_t a, std::int64_t b) {
  return CheckedMul(a / std::gcd(a, b), b);
}

}  // namespace treedist
