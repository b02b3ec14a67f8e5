// Copyright 2026 The Authors.
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

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cstdio>
#include <string>
#include <string_view>

#include "curvatroid/error.hpp"

namespace curvatroid {

/// Exact fraction, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace detail

/// Parses "p/q" or "p" (optional sign on p). Anything else is BadRational.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorCode::kBadRational, "cannot parse '" + std::string(text) + "' as p/q");
  }
  const Integer q = detail::parse_integer(den);
  if (q == 0) throw Error(ErrorCode::kBadRational, "zero denominator in '" + std::string(text) + "'");
  return Rational(detail::parse_integer(num), q);
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Approximate 6-significant-digit rendering for human readers only.
inline std::string to_decimal(const Rational& r, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, r.convert_to<double>());
  return buf;
}

}  // namespace curvatroid
