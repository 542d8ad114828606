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

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tforge {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always held in lowest terms with a positive
/// denominator. Sequence terms built from it are required to be >= 0.
using Rat = boost::multiprecision::cpp_rational;

/// Parses `p/q` or `p` (decimal digits only, no sign). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

/// `p/q`, or `p` when the denominator is 1. Never a decimal expansion.
std::string to_string(const Rat& r);

Rat pow(const Rat& base, unsigned exponent);

}  // namespace tforge
