// Copyright 2026 The twostep Authors
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

namespace twostep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitData = 4;

/// Runs one `gen`, `run`, `sweep` or `inspect` invocation. `args` excludes
/// the program name. Results go to --out when given, otherwise to `out`;
/// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Text summary printed by `inspect`: width, unit depth and gate counts of
/// G1, G2 and the whole two-step circuit.
std::string inspect_summary(int n, const std::string& dataset, int q1, int q2);

}  // namespace twostep::cli
