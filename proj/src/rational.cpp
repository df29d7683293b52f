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

#include "clusterbound/rational.hpp"

#include <cctype>
#include <limits>

namespace clusterbound {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int's string constructor reads a leading 0 as an octal prefix.
BigInt DecimalDigits(std::string_view s) {
  const auto first = s.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt(std::string(s.substr(first)));
}

BigInt ParseInteger(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) {
    throw ParseError("malformed number '" + std::string(whole) + "'");
  }
  BigInt value = DecimalDigits(s);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = ParseInteger(text.substr(0, slash), whole);
    BigInt den = ParseInteger(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    BigInt exp_value = ParseInteger(exp_text, whole);
    if (abs(exp_value) > 4096) throw ParseError("exponent out of range in '" + std::string(whole) + "'");
    exponent = exp_value.convert_to<long>();
    text = text.substr(0, e);
  }

  std::string digits;
  long fraction_digits = 0;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !AllDigits(int_part)) ||
        (!frac_part.empty() && !AllDigits(frac_part))) {
      throw ParseError("malformed number '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!AllDigits(text)) throw ParseError("malformed number '" + std::string(whole) + "'");
    digits = std::string(text);
  }

  Rational value{DecimalDigits(digits)};
  const long shift = exponent - fraction_digits;
  const BigInt scale = Pow(BigInt(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
  value = shift < 0 ? value / Rational(scale) : value * Rational(scale);
  return negative ? Rational(-value) : value;
}

std::string ToFractionString(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::optional<std::string> ToDecimalString(const Rational& value) {
  BigInt den = denominator(value);
  unsigned twos = 0;
  unsigned fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;

  const unsigned places = std::max(twos, fives);
  const BigInt scaled = numerator(value) * Pow(BigInt(10), places) / denominator(value);
  const bool negative = scaled < 0;
  std::string digits = (negative ? BigInt(-scaled) : scaled).str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

std::string ToCanonicalString(const Rational& value) {
  if (auto decimal = ToDecimalString(value)) return *decimal;
  return ToFractionString(value);
}

BigInt Floor(const Rational& value) {
  const BigInt& num = numerator(value);
  const BigInt& den = denominator(value);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt Ceil(const Rational& value) {
  const BigInt& num = numerator(value);
  const BigInt& den = denominator(value);
  BigInt q = num / den;
  if (num % den != 0 && num > 0) q += 1;
  return q;
}

Rational TruncateDecimal(const Rational& value, unsigned digits) {
  const BigInt scale = Pow(BigInt(10), digits);
  const BigInt truncated = numerator(value) * scale / denominator(value);
  return Rational(truncated, scale);
}

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

Float50 ToFloat50(const Rational& value) {
  return Float50(numerator(value)) / Float50(denominator(value));
}

std::int64_t SaturateToInt64(const BigInt& value) {
  static const BigInt kMax(std::numeric_limits<std::int64_t>::max());
  static const BigInt kMin(std::numeric_limits<std::int64_t>::min());
  if (value > kMax) return std::numeric_limits<std::int64_t>::max();
  if (value < kMin) return std::numeric_limits<std::int64_t>::min();
  return value.convert_to<std::int64_t>();
}

BigInt Factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt Pow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

Rational Pow(const Rational& base, unsigned exponent) {
  return Rational(Pow(numerator(base), exponent), Pow(denominator(base), exponent));
}

}  // namespace clusterbound
