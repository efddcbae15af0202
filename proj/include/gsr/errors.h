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

#include <stdexcept>
#include <string>

namespace gsr {

/// A precondition on the input was not met (unknown vertex, bad neighbor choice, malformed file).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A protocol hypothesis does not hold for the given input, so the routine provably cannot run.
struct HypothesisError : DomainError {
    using DomainError::DomainError;
};

/// The input is larger than a brute-force routine is configured to handle.
struct SizeBoundError : std::length_error {
    using std::length_error::length_error;
};

}  // namespace gsr
