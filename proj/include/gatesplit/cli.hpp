// Copyright 2026 The gatesplit Authors
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

#include <exception>
#include <iosfwd>

namespace gatesplit::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      // unknown verb/flag/missing option
inline constexpr int kExitData = 3;       // malformed gate file or payload
inline constexpr int kExitNumerical = 4;  // numerical routine failed

/// Exit code for an exception escaping a subcommand.
int classify_error(const std::exception& e);

/// Runs one invocation. `out` receives exactly one JSON document on success;
/// diagnostics go to `err`. Reads GATESPLIT_THREADS to cap inner parallelism
/// (0 or unset keeps the OpenMP default).
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace gatesplit::cli
