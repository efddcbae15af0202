// Copyright 2026 The gsroute Authors
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

namespace gsr::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUnmet = 2,
    kSizeBound = 3,
};

/// Runs the gsr command line. args[0] is the program name. JSON goes to `out` unless --out is given.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gsr::cli
