// Copyright 2026 The triangle-forge Authors
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

#include "tforge/rat.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tforge {

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) +
                                "'");
  }
  return BigInt(std::string(digits));
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_digits(text, text));
  }
  BigInt num = parse_digits(text.substr(0, slash), text);
  BigInt den = parse_digits(text.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  return Rat(num, den);
}

std::string to_string(const Rat& r) {
  const BigInt& den = boost::multiprecision::denominator(r);
  std::string out = boost::multiprecision::numerator(r).str();
  if (den != 1) {
    out += '/';
    out += den.str();
  }
  return out;
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace tforge
