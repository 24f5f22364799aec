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

#include "retromaser/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "retromaser/prediction.hpp"

namespace retromaser {

namespace {

constexpr double kCompletenessTol = 1e-11;
constexpr double kOracleTol = 1e-12;
constexpr double kTable1Tol = 1e-14;
constexpr double kDenseTol = 1e-9;
constexpr double kTrappingTol = 1e-12;

CheckResult run_check(std::string name, double tolerance,
                      const std::function<double()> &measure) {
    try {
        const double value = measure();
        return {std::move(name), value <= tolerance, value, tolerance, ""};
    } catch (const std::exception &e) {
        return {std::move(name), false, std::nan(""), tolerance, e.what()};
    }
}

DetectionSequence sequence_from_mask(std::uint64_t mask, std::size_t length) {
    std::vector<AtomOutcome> outcomes(length);
    for (std::size_t i = 0; i < length; ++i) {
        outcomes[i] = (mask >> i) & 1 ? AtomOutcome::Ground : AtomOutcome::Excited;
    }
    return DetectionSequence(std::move(outcomes));
}

} // namespace

VerificationReport run_verification(const MaserParams &params,
                                    const RabiKernel &kernel) {
    VerificationReport report;
    auto &checks = report.checks;

    checks.push_back(run_check("pom_completeness(s<=10)", kCompletenessTol, [&] {
        double worst = 0.0;
        for (std::size_t s = 1; s <= 10; ++s) {
            worst = std::max(worst, completeness_check(s, params, kernel));
        }
        return worst;
    }));

    checks.push_back(run_check("oracle_equivalence(s<=6)", kOracleTol, [&] {
        const MaserParams oracle_params(params.theta(), std::min<std::size_t>(params.n_max(), 30));
        double worst = 0.0;
        for (std::size_t s = 0; s <= 6; ++s) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
                const auto seq = sequence_from_mask(mask, s);
                const auto pom = build_pom(seq, oracle_params, kernel);
                const auto forward = sequence_likelihood(seq, oracle_params);
                for (std::size_t n = 0; n <= oracle_params.n_max(); ++n) {
                    worst = std::max(worst, std::abs(pom[n] - forward.per_initial_n[n]));
                }
            }
        }
        return worst;
    }));

    checks.push_back(run_check("two_atom_closed_forms", kTable1Tol, [&] {
        double worst = 0.0;
        for (auto row : {Table1Row::ExcitedExcited, Table1Row::GroundGround,
                         Table1Row::ExcitedGround, Table1Row::GroundExcited}) {
            worst = std::max(worst, table1_deviation(row, params, kernel));
        }
        return worst;
    }));

    for (std::size_t cutoff : {5u, 20u, 60u}) {
        std::ostringstream name;
        name << "unitary_vs_dense_exponential(M=" << cutoff << ")";
        checks.push_back(run_check(name.str(), kDenseTol, [&] {
            return matrix_exponential_check(params, cutoff);
        }));
    }

    checks.push_back(run_check("trapping_states(theta=pi)", kTrappingTol, [&] {
        const MaserParams trapping(std::numbers::pi, params.n_max());
        double worst = 0.0;
        for (std::size_t k = 1; k * k - 1 <= trapping.n_max(); ++k) {
            const std::size_t n = k * k - 1;
            worst = std::max(worst, std::abs(kernel.excited(n, 1, trapping) - 1.0));
            worst = std::max(worst, std::abs(kernel.ground(n, 1, trapping)));
        }
        return worst;
    }));

    return report;
}

} // namespace retromaser
