// Copyright 2026 The quditconv developers
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

#ifndef QUDITCONV_CLI_HPP
#define QUDITCONV_CLI_HPP

#include <cstdint>
#include <string>

#include "quditconv/analysis.hpp"

namespace qconv {

/// Exit codes shared by the subcommands: 0 success (for search: witness
/// found), 1 properties violated / no witness, 2 parse, validation, or
/// config error, 3 file I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNoWitness = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Budget defaults from the environment: QUDITCONV_MAX_LEN,
/// QUDITCONV_REPETITION_BUDGET, QUDITCONV_ENUM_BUDGET. Unset or malformed
/// variables leave the corresponding field untouched.
AnalysisBudgets budgets_from_env(AnalysisBudgets base = {});

/// Full command-line driver (subcommands analyze, verify, search).
/// Returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace qconv

#endif
