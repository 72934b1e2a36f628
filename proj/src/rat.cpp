// Copyright 2026 The blvl Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "blvl/rat.hpp"

#include "blvl/errors.hpp"

#include <algorithm>
#include <cctype>

namespace blvl {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

// GMP reads a leading 0 as an octal prefix.
std::string strip_zeros(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? std::string("0") : std::string(digits.substr(first));
}

}  // namespace

Rat rat(long num, long den) {
  if (den == 0) throw ValidationError("zero denominator");
  return Rat(BigInt(num), BigInt(den));
}

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational literal \"" + std::string(text) + "\"");
  BigInt n(strip_zeros(num));
  BigInt d(strip_zeros(den));
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Rat(n, d);
}

std::string to_string(const Rat& value) { return value.str(); }

VecQ zeros(Index size) { return VecQ::Zero(size); }

MatQ zeros(Index rows, Index cols) { return MatQ::Zero(rows, cols); }

}  // namespace blvl
