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

#include "ruledarr/numeric.hpp"

#include <limits>

#include "ruledarr/error.hpp"

namespace ruledarr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NonNegativeEOnly: return "NonNegativeEOnly";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::EmptySingularLocus: return "EmptySingularLocus";
    case ErrorCode::AuditFailed: return "AuditFailed";
    case ErrorCode::InconsistentCurveStats: return "InconsistentCurveStats";
    case ErrorCode::C0DisjointRequired: return "C0DisjointRequired";
    case ErrorCode::BNotAE: return "BNotAE";
    case ErrorCode::ParameterRange: return "ParameterRange";
    case ErrorCode::MultiplicityProfileNotBinary26: return "MultiplicityProfileNotBinary26";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Integer pow2(std::uint64_t n) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, n);
  return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_decimal(const Rational& q, int places) {
  require(places >= 0, ErrorCode::InvalidArgument, "negative decimal places");
  const Integer scale = [&] {
    Integer s;
    mpz_ui_pow_ui(s.get_mpz_t(), 10, static_cast<unsigned long>(places));
    return s;
  }();
  const bool negative = sgn(q) < 0;
  const Rational scaled = abs(q) * scale;

  Integer quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(),
              scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const int cmp_half = cmp(Integer(2 * remainder), scaled.get_den());
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quotient.get_mpz_t()))) {
    ++quotient;
  }

  std::string digits = quotient.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && quotient != 0) digits.insert(0, "-");
  return digits;
}

Integer parse_integer(const std::string& text) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    fail(ErrorCode::ParseError, "not an integer: '" + text + "'");
  }
  return out;
}

std::int64_t to_int64(const Integer& v) {
  require(mpz_fits_slong_p(v.get_mpz_t()) != 0, ErrorCode::ParameterRange,
          "integer out of machine range: " + v.get_str());
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return v.get_si();
}

}  // namespace ruledarr
