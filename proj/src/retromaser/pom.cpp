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

#include "retromaser/pom.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace retromaser {

namespace {

constexpr double kRoundingSlack = 1e-12;

double checked_product(double coefficient, double factor, std::size_t n,
                       const DetectionSequence &seq) {
    double c = coefficient * factor;
    if (!(c >= -kRoundingSlack && c <= 1.0 + kRoundingSlack)) {
        std::ostringstream msg;
        msg << "POM coefficient for sequence '" << seq.str() << "' at n=" << n
            << " left [0,1]: " << c;
        throw Error(ErrorCode::Internal, msg.str());
    }
    return std::clamp(c, 0.0, 1.0);
}

// Multiplies coefficients in place by the factors of seq. Shared by
// build_pom and the completeness enumeration.
void apply_sequence(std::vector<double> &coefficients,
                    const DetectionSequence &seq, const MaserParams &params,
                    const RabiKernel &kernel) {
    unsigned shift = 1;
    for (AtomOutcome outcome : seq) {
        const auto factor =
            outcome == AtomOutcome::Excited ? kernel.excited : kernel.ground;
        for (std::size_t n = 0; n < coefficients.size(); ++n) {
            coefficients[n] =
                checked_product(coefficients[n], factor(n, shift, params), n, seq);
        }
        if (outcome == AtomOutcome::Ground) {
            ++shift;
        }
    }
}

} // namespace

PomElement build_pom(const DetectionSequence &seq, const MaserParams &params,
                     const RabiKernel &kernel) {
    std::vector<double> coefficients(params.n_max() + 1, 1.0);
    apply_sequence(coefficients, seq, params, kernel);
    return PomElement(FockWeights(std::move(coefficients)), seq, params);
}

double completeness_check(std::size_t s, const MaserParams &params,
                          const RabiKernel &kernel) {
    if (s > kMaxCompletenessLength) {
        std::ostringstream msg;
        msg << "completeness enumeration is limited to sequences of at most "
            << kMaxCompletenessLength << " atoms (2^" << kMaxCompletenessLength
            << " elements), got " << s;
        throw Error(ErrorCode::BoundExceeded, msg.str());
    }
    const std::size_t size = params.n_max() + 1;
    std::vector<double> sum(size, 0.0);
    std::vector<double> coefficients(size);
    std::vector<AtomOutcome> outcomes(s);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        for (std::size_t i = 0; i < s; ++i) {
            outcomes[i] = (mask >> i) & 1 ? AtomOutcome::Ground : AtomOutcome::Excited;
        }
        std::fill(coefficients.begin(), coefficients.end(), 1.0);
        apply_sequence(coefficients, DetectionSequence(outcomes), params, kernel);
        for (std::size_t n = 0; n < size; ++n) {
            sum[n] += coefficients[n];
        }
    }
    double deviation = 0.0;
    for (double v : sum) {
        deviation = std::max(deviation, std::abs(v - 1.0));
    }
    return deviation;
}

std::optional<Table1Row> parse_table1_row(std::string_view text) {
    if (text == "ee") return Table1Row::ExcitedExcited;
    if (text == "gg") return Table1Row::GroundGround;
    if (text == "eg") return Table1Row::ExcitedGround;
    if (text == "ge") return Table1Row::GroundExcited;
    return std::nullopt;
}

std::string_view table1_row_name(Table1Row row) noexcept {
    switch (row) {
    case Table1Row::ExcitedExcited: return "ee";
    case Table1Row::GroundGround: return "gg";
    case Table1Row::ExcitedGround: return "eg";
    case Table1Row::GroundExcited: return "ge";
    }
    return "";
}

DetectionSequence table1_sequence(Table1Row row) {
    return DetectionSequence::parse(table1_row_name(row));
}

std::function<double(std::size_t)> symbolic_table1(Table1Row row, double theta) {
    auto cos2 = [theta](double k) {
        const double c = std::cos(theta * std::sqrt(k));
        return c * c;
    };
    auto sin2 = [theta](double k) {
        const double s = std::sin(theta * std::sqrt(k));
        return s * s;
    };
    switch (row) {
    case Table1Row::ExcitedExcited:
        return [=](std::size_t n) {
            const double c = cos2(n + 1.0);
            return c * c;
        };
    case Table1Row::GroundGround:
        return [=](std::size_t n) { return sin2(n + 2.0) * sin2(n + 1.0); };
    case Table1Row::ExcitedGround:
        return [=](std::size_t n) { return cos2(n + 1.0) * sin2(n + 1.0); };
    case Table1Row::GroundExcited:
        return [=](std::size_t n) { return cos2(n + 2.0) * sin2(n + 1.0); };
    }
    throw Error(ErrorCode::InvalidArgument, "unknown two-atom row");
}

double table1_deviation(Table1Row row, const MaserParams &params,
                        const RabiKernel &kernel) {
    const auto pom = build_pom(table1_sequence(row), params, kernel);
    const auto closed_form = symbolic_table1(row, params.theta());
    double deviation = 0.0;
    for (std::size_t n = 0; n <= params.n_max(); ++n) {
        deviation = std::max(deviation, std::abs(pom[n] - closed_form(n)));
    }
    return deviation;
}

} // namespace retromaser
