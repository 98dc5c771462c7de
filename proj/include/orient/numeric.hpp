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

#ifndef ORIENT_NUMERIC_HPP_
#define ORIENT_NUMERIC_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace orient {

// Exact arithmetic for probabilities, truncated means, Lagrangian rewards
// and fractional budgets.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Accepts "p", "p/q", "-p/q" and finite decimal literals such as "0.25".
// Throws Error(kParse) on anything else.
Rational parse_rational(std::string_view text);

std::int64_t floor_to_int64(const Rational& value);
std::int64_t ceil_to_int64(const Rational& value);
double to_double(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace orient

#endif  // ORIENT_NUMERIC_HPP_
