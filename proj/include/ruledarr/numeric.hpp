// Copyright 2026 The ruledarr Authors
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

#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ruledarr {

using Integer = mpz_class;
using Rational = mpq_class;

/// 2^n as a big integer.
Integer pow2(std::uint64_t n);

/// Builds num/den in canonical form. Throws InvalidArgument on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline Rational to_rational(const Integer& v) { return Rational(v); }

bool is_integer(const Rational& q);

/// Rounds half-to-even at `places` fractional digits and renders in fixed
/// notation ("-3.3582"). places == 0 gives an integer string.
std::string to_decimal(const Rational& q, int places);

/// Parses a base-10 integer string. Throws ParseError.
Integer parse_integer(const std::string& text);

std::int64_t to_int64(const Integer& v);

}  // namespace ruledarr
