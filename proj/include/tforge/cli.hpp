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

#include <iosfwd>
#include <string>
#include <vector>

namespace tforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Default cap on triangle depth; overridden by TRIANGLE_FORGE_MAX_N.
inline constexpr long long kDefaultMaxDepth = 1000;

/// Runs one command line (without the program name). Artifacts go to `out`
/// unless --output is given, diagnostics to `err`. Returns 0 on success,
/// 1 when a verification fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tforge::cli
