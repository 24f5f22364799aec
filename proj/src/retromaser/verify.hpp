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

#include <string>
#include <vector>

#include "retromaser/pom.hpp"
#include "retromaser/types.hpp"

namespace retromaser {

struct CheckResult {
    std::string name;
    bool passed;
    /// Measured deviation (or 0/1 for exact checks).
    double value;
    double tolerance;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool passed() const noexcept {
        for (const auto &c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

/**
 * Runs the model invariants at the given parameters:
 *  - POM completeness for every length 1..10
 *  - forward likelihoods equal POM coefficients for every sequence up to 6
 *    atoms (n <= min(n_max, 30))
 *  - two-atom closed forms against build_pom
 *  - closed-form unitary against a dense exponential, cutoffs 5, 20, 60
 *  - trapping-state nodes at theta = pi
 * A check that throws is reported as failed with the exception text.
 * `kernel` only affects the POM side, so a broken kernel shows up as failed
 * checks rather than being masked.
 */
VerificationReport run_verification(const MaserParams &params,
                                    const RabiKernel &kernel = {});

} // namespace retromaser
