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

#include "retromaser/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace retromaser {

MaserParams::MaserParams(double theta, std::size_t n_max, double detuning)
    : theta_(theta), n_max_(n_max), detuning_(detuning) {
    if (!std::isfinite(theta) || theta < 0.0) {
        std::ostringstream msg;
        msg << "theta must be finite and non-negative, got " << theta;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    if (n_max < 1) {
        throw Error(ErrorCode::InvalidArgument, "n_max must be at least 1");
    }
    if (detuning != 0.0) {
        std::ostringstream msg;
        msg << "only resonant operation is supported (detuning must be 0, got "
            << detuning << ")";
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

char outcome_char(AtomOutcome outcome) noexcept {
    return outcome == AtomOutcome::Excited ? 'e' : 'g';
}

DetectionSequence DetectionSequence::parse(std::string_view text) {
    std::vector<AtomOutcome> outcomes;
    outcomes.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case 'e':
            outcomes.push_back(AtomOutcome::Excited);
            break;
        case 'g':
            outcomes.push_back(AtomOutcome::Ground);
            break;
        default: {
            std::ostringstream msg;
            msg << "invalid detection sequence '" << text << "': character "
                << i << " is '" << text[i] << "', expected 'e' or 'g'";
            throw Error(ErrorCode::InvalidArgument, msg.str());
        }
        }
    }
    return DetectionSequence(std::move(outcomes));
}

std::size_t DetectionSequence::ground_count() const noexcept {
    std::size_t count = 0;
    for (auto o : outcomes_) {
        count += o == AtomOutcome::Ground ? 1 : 0;
    }
    return count;
}

DetectionSequence DetectionSequence::appended(AtomOutcome outcome) const {
    auto outcomes = outcomes_;
    outcomes.push_back(outcome);
    return DetectionSequence(std::move(outcomes));
}

std::string DetectionSequence::str() const {
    std::string out;
    out.reserve(outcomes_.size());
    for (auto o : outcomes_) {
        out.push_back(outcome_char(o));
    }
    return out;
}

FockWeights::FockWeights(std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (weights_.size() < 2) {
        throw Error(ErrorCode::InvalidArgument,
                    "photon-number weights need at least two entries (n_max >= 1)");
    }
    for (std::size_t n = 0; n < weights_.size(); ++n) {
        if (!std::isfinite(weights_[n]) || weights_[n] < 0.0) {
            std::ostringstream msg;
            msg << "photon-number weight at n=" << n
                << " must be finite and non-negative, got " << weights_[n];
            throw Error(ErrorCode::InvalidArgument, msg.str());
        }
    }
}

FockWeights FockWeights::ones(std::size_t n_max) {
    return FockWeights(std::vector<double>(n_max + 1, 1.0));
}

FockWeights FockWeights::zeros(std::size_t n_max) {
    return FockWeights(std::vector<double>(n_max + 1, 0.0));
}

FockWeights FockWeights::point_mass(std::size_t n_max, std::size_t n) {
    if (n > n_max) {
        throw Error(ErrorCode::InvalidArgument,
                    "point mass outside photon-number range");
    }
    std::vector<double> w(n_max + 1, 0.0);
    w[n] = 1.0;
    return FockWeights(std::move(w));
}

double FockWeights::total() const noexcept {
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

bool FockWeights::empty_support() const noexcept {
    for (double w : weights_) {
        if (w != 0.0) {
            return false;
        }
    }
    return true;
}

FockWeights FockWeights::normalized() const {
    const double sum = total();
    if (!(sum > 0.0)) {
        throw Error(ErrorCode::EmptySupport,
                    "cannot normalize photon-number weights with zero total");
    }
    std::vector<double> out(weights_.size());
    for (std::size_t n = 0; n < weights_.size(); ++n) {
        out[n] = weights_[n] / sum;
    }
    return FockWeights(std::move(out));
}

double rabi_frequency_factor(std::size_t n, unsigned m,
                             const MaserParams &params) {
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "Rabi shift m must be >= 1");
    }
    return params.theta() * std::sqrt(static_cast<double>(n + m));
}

RabiTrig rabi_trig(double angle) noexcept {
    // theta and sqrt(n+m) each carry a relative rounding error of order
    // epsilon, so sin/cos cannot be resolved below a few eps * angle.
    const double floor =
        8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(angle));
    RabiTrig t{std::cos(angle), std::sin(angle)};
    if (std::abs(t.cos) < floor) {
        t.cos = 0.0;
    }
    if (std::abs(t.sin) < floor) {
        t.sin = 0.0;
    }
    return t;
}

double c_factor(std::size_t n, unsigned m, const MaserParams &params) {
    const double c = rabi_trig(rabi_frequency_factor(n, m, params)).cos;
    return c * c;
}

double s_factor(std::size_t n, unsigned m, const MaserParams &params) {
    const double s = rabi_trig(rabi_frequency_factor(n, m, params)).sin;
    return s * s;
}

} // namespace retromaser
