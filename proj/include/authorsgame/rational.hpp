// Copyright 2026 The authorsgame Authors
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

#ifndef AUTHORSGAME_RATIONAL_HPP_
#define AUTHORSGAME_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "authorsgame/errors.hpp"

namespace authorsgame {

// Exact rational in canonical reduced form with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

inline Rational magnitude(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Exact value of a finite double (every finite double is a dyadic rational).
inline Rational from_double(double x) {
  if (!std::isfinite(x)) {
    throw ValidationError("cannot represent a non-finite value as a rational");
  }
  return Rational(x);
}

// Always "p/q", including integers ("3/1") and zero ("0/1").
inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Base-10 digit string to integer; leading zeros must not select octal.
inline Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer(std::string(digits));
}

inline Integer pow10(long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

inline Rational parse_decimal(std::string_view s, std::string_view full) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 4) {
      throw ValidationError("malformed exponent in number: " +
                            std::string(full));
    }
    exponent = std::stol(std::string(exp));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ValidationError("malformed decimal: " + std::string(full));
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) {
      throw ValidationError("malformed number: " + std::string(full));
    }
    digits = std::string(s);
  }
  Rational value{decimal_integer(digits)};
  if (exponent >= 0) {
    value *= pow10(exponent);
  } else {
    value /= pow10(-exponent);
  }
  return negative ? Rational(-value) : value;
}

}  // namespace detail

// Parses "p/q", "-p/q", integers, and base-10 decimals ("0.125", "-.5",
// "2.5e-3") into the exact rational they denote.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) throw ValidationError("empty rational string");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!detail::all_digits(num) || !detail::all_digits(den)) {
      throw ValidationError("malformed fraction: " + std::string(text));
    }
    const Integer d = detail::decimal_integer(den);
    if (d == 0) throw ValidationError("zero denominator: " + std::string(text));
    Rational q(detail::decimal_integer(num), d);
    return negative ? Rational(-q) : q;
  }
  return detail::parse_decimal(s, text);
}

// Simplest rational (smallest denominator, then smallest numerator) in the
// closed interval [lo, hi], 0 <= lo <= hi. Continued-fraction descent.
inline Rational simplest_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo < 0) throw ValidationError("simplest_between expects lo >= 0");
  // Stack of partial quotients; rebuilt bottom-up at the end.
  std::vector<Integer> quotients;
  for (;;) {
    Integer fl = boost::multiprecision::numerator(lo) /
                 boost::multiprecision::denominator(lo);
    if (Rational(fl) == lo) {
      quotients.push_back(fl);
      break;
    }
    if (Rational(fl + 1) <= hi) {
      quotients.push_back(fl + 1);
      break;
    }
    quotients.push_back(fl);
    Rational next_lo = 1 / (hi - fl);
    Rational next_hi = 1 / (lo - fl);
    lo = next_lo;
    hi = next_hi;
  }
  Rational value = quotients.back();
  for (auto it = quotients.rbegin() + 1; it != quotients.rend(); ++it) {
    value = Rational(*it) + 1 / value;
  }
  return value;
}

}  // namespace authorsgame

#endif  // AUTHORSGAME_RATIONAL_HPP_
