// Copyright 2026 The Clusterbound Authors.
//
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

#ifndef CLUSTERBOUND_RATIONAL_HPP_
#define CLUSTERBOUND_RATIONAL_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace clusterbound {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
// Numeric evaluation of the irrational pieces (square roots, fractional
// powers, e). 50 decimal digits keeps the 1e-12 evaluation budget slack.
using Float50 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses "12", "-0.25", "1e-4", "3.5E2" or "2/9" exactly. Throws ParseError.
Rational ParseRational(std::string_view text);

// "p/q" with q >= 1 and gcd(p, q) = 1; integers render as "p/1".
std::string ToFractionString(const Rational& value);

// Terminating decimal expansion if one exists ("0.5", "3", "-0.0001"),
// otherwise std::nullopt.
std::optional<std::string> ToDecimalString(const Rational& value);

// Decimal when terminating, "p/q" otherwise. Parses back to the same value.
std::string ToCanonicalString(const Rational& value);

BigInt Floor(const Rational& value);
BigInt Ceil(const Rational& value);

// Truncation toward zero to `digits` decimal places.
Rational TruncateDecimal(const Rational& value, unsigned digits);

double ToDouble(const Rational& value);
Float50 ToFloat50(const Rational& value);

// Clamps into the int64 range.
std::int64_t SaturateToInt64(const BigInt& value);

BigInt Factorial(unsigned n);
BigInt Pow(const BigInt& base, unsigned exponent);
Rational Pow(const Rational& base, unsigned exponent);

}  // namespace clusterbound

#endif  // CLUSTERBOUND_RATIONAL_HPP_
