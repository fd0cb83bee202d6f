// Copyright 2026 The rpr2 Authors
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


// The rpr2 command line: one subcommand per analysis, each emitting JSON or
// CSV plus a run manifest that replays it.

#ifndef RPR2_TOOLS_CLI_H_
#define RPR2_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "rpr2/step_function.h"

namespace rpr2::cli {

enum ExitCode { kOk = 0, kUsage = 1, kNumeric = 2 };

// args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// "sign", "zero", "slin:<s>[:<steps>]", inline JSON {"a": [...], "b": [...]}
// or a path to a file holding that JSON. Throws std::invalid_argument.
StepFunction ParseFSpec(const std::string& spec);

// Nine significant digits.
std::string FormatNumber(double v);
double Round9(double v);

}  // namespace rpr2::cli

#endif  // RPR2_TOOLS_CLI_H_
