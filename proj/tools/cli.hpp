// Copyright 2026 The retromaser Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace retromaser::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kImpossibleEvent = 2,
    kVerificationFailed = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

/// printf("%.17g") rendering used for every number the tool writes.
std::string format_number(double value);

} // namespace retromaser::cli
