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

#include "tforge/triangles.hpp"

namespace tforge {

/// {"construction": ..., "params": {...}, "N": n, "rows": [["1"], ...]}
/// with entries as exact rational strings.
std::string to_json(const Triangle& t);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
Triangle triangle_from_json(const std::string& text);

/// One line per row, entries comma-separated, trailing newline.
std::string to_csv(const Triangle& t);

/// Rows centred under each other, for terminals.
std::string to_pretty(const Triangle& t);

}  // namespace tforge
