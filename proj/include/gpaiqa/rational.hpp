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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpaiqa {

/// Exact arbitrary-precision rational. All score arithmetic stays in this
/// type; rounding happens only when a value is rendered.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "2", "-3", "1.25" or "7/4". Returns nullopt on anything else
/// (including a zero denominator).
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text: integers as "2", terminating fractions in shortest
/// decimal form ("1.25"), everything else as "p/q". parse_rational of the
/// result gives back the same value.
std::string to_canonical_string(const Rational& value);

/// Always "p/q" or "p"; used where an exact value is serialized.
std::string to_exact_string(const Rational& value);

/// Two decimals, round-half-up (away from zero for the half case on
/// non-negative input), e.g. 2000/29 -> "68.97".
std::string format_fixed2(const Rational& value);

}  // namespace gpaiqa
