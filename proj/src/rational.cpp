// Copyright 2026 The gpaiqa Authors
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

#include "gpaiqa/rational.hpp"

#include <cctype>

namespace gpaiqa {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

cpp_int pow10(unsigned exponent) {
  cpp_int result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

// cpp_int treats a leading zero as an octal prefix.
cpp_int decimal(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return cpp_int(std::string(digits.substr(first)));
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    const cpp_int d = decimal(den);
    if (d == 0) return std::nullopt;
    value = Rational(decimal(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    cpp_int scale = pow10(static_cast<unsigned>(frac.size()));
    value = Rational(decimal(whole) * scale + decimal(frac), scale);
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Rational(decimal(text));
  }
  return negative ? Rational(-value) : value;
}

std::string to_exact_string(const Rational& value) {
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_canonical_string(const Rational& value) {
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  // Terminating iff the reduced denominator has no prime factors besides 2 and 5.
  cpp_int rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  const unsigned digits = std::max(twos, fives);
  const cpp_int scale = pow10(digits);
  cpp_int scaled = num * (scale / den);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.str();
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  return negative ? "-" + s : s;
}

std::string format_fixed2(const Rational& value) {
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  const Rational shifted = magnitude * 100 + Rational(1, 2);
  const cpp_int cents = boost::multiprecision::numerator(shifted) /
                        boost::multiprecision::denominator(shifted);
  std::string s = cents.str();
  if (s.size() < 3) s.insert(0, 3 - s.size(), '0');
  s.insert(s.size() - 2, ".");
  return (negative && cents != 0) ? "-" + s : s;
}

}  // namespace gpaiqa
