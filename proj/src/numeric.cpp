// Copyright 2026 The Orient Authors
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

#include "orient/numeric.hpp"

#include <cctype>
#include <limits>

#include "orient/error.hpp"

namespace orient {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      fail(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
    }
    BigInt d{std::string(den)};
    if (d == 0) {
      fail(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    }
    result = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      fail(ErrorCode::kParse, "malformed decimal '" + std::string(text) + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    result = Rational(w * scale + BigInt(std::string(frac)), scale);
  } else {
    if (!all_digits(s)) {
      fail(ErrorCode::kParse, "malformed number '" + std::string(text) + "'");
    }
    result = Rational(BigInt(std::string(s)));
  }
  return negative ? Rational(-result) : result;
}

std::int64_t floor_to_int64(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  if (q > std::numeric_limits<std::int64_t>::max() ||
      q < std::numeric_limits<std::int64_t>::min()) {
    fail(ErrorCode::kInvalidArgument, "value out of 64-bit range");
  }
  return static_cast<std::int64_t>(q);
}

std::int64_t ceil_to_int64(const Rational& value) {
  return -floor_to_int64(Rational(-value));
}

double to_double(const Rational& value) {
  return static_cast<double>(value);
}

}  // namespace orient
