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

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace retromaser {

enum class ErrorCode {
    InvalidArgument = 1,
    /// The conditioning event is impossible: no photon number survives.
    EmptySupport = 2,
    /// An enumeration or dense-matrix size limit was exceeded.
    BoundExceeded = 3,
    Internal = 4,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/**
 * Micromaser parameters. The physics depends on the coupling constant and
 * the interaction time only through their product theta = lambda * tau, so
 * that product is the stored quantity.
 */
class MaserParams {
  public:
    /// Throws Error(InvalidArgument) unless theta is finite and >= 0,
    /// n_max >= 1 and detuning == 0.
    MaserParams(double theta, std::size_t n_max, double detuning = 0.0);

    double theta() const noexcept { return theta_; }
    std::size_t n_max() const noexcept { return n_max_; }
    double detuning() const noexcept { return detuning_; }

  private:
    double theta_;
    std::size_t n_max_;
    double detuning_;
};

enum class AtomOutcome : std::uint8_t { Excited, Ground };

char outcome_char(AtomOutcome outcome) noexcept;

/// Chronologically ordered atomic detections; element 0 is the first atom
/// through the cavity.
class DetectionSequence {
  public:
    DetectionSequence() = default;
    explicit DetectionSequence(std::vector<AtomOutcome> outcomes)
        : outcomes_(std::move(outcomes)) {}

    /// Parses a string over {e, g}. Anything else is InvalidArgument.
    static DetectionSequence parse(std::string_view text);

    std::span<const AtomOutcome> outcomes() const noexcept { return outcomes_; }
    std::size_t size() const noexcept { return outcomes_.size(); }
    bool empty() const noexcept { return outcomes_.empty(); }
    AtomOutcome operator[](std::size_t i) const { return outcomes_[i]; }
    auto begin() const noexcept { return outcomes_.begin(); }
    auto end() const noexcept { return outcomes_.end(); }

    std::size_t ground_count() const noexcept;
    DetectionSequence appended(AtomOutcome outcome) const;
    std::string str() const;

    friend bool operator==(const DetectionSequence &,
                           const DetectionSequence &) = default;

  private:
    std::vector<AtomOutcome> outcomes_;
};

/**
 * Non-negative relative weights over photon numbers 0..n_max. Weights are
 * kept unnormalized; normalized() is the explicit final step.
 */
class FockWeights {
  public:
    FockWeights() = default;
    /// Throws InvalidArgument on a negative or non-finite entry or when the
    /// vector is shorter than two entries (n_max >= 1).
    explicit FockWeights(std::vector<double> weights);

    static FockWeights ones(std::size_t n_max);
    static FockWeights zeros(std::size_t n_max);
    static FockWeights point_mass(std::size_t n_max, std::size_t n);

    std::size_t size() const noexcept { return weights_.size(); }
    std::size_t n_max() const noexcept { return weights_.size() - 1; }
    double operator[](std::size_t n) const { return weights_[n]; }
    std::span<const double> values() const noexcept { return weights_; }

    double total() const noexcept;
    /// True when every entry is exactly zero.
    bool empty_support() const noexcept;
    /// Throws Error(EmptySupport) when the total weight is zero.
    FockWeights normalized() const;

    friend bool operator==(const FockWeights &, const FockWeights &) = default;

  private:
    std::vector<double> weights_;
};

/// theta * sqrt(n + m), i.e. Omega(n + m) tau / 2. Requires m >= 1.
double rabi_frequency_factor(std::size_t n, unsigned m,
                             const MaserParams &params);

/// cos^2(theta sqrt(n + m)): probability that an excited atom leaves
/// excited when the cavity holds n + m - 1 photons.
double c_factor(std::size_t n, unsigned m, const MaserParams &params);

/// sin^2(theta sqrt(n + m)). c_factor + s_factor == 1 up to rounding.
double s_factor(std::size_t n, unsigned m, const MaserParams &params);

struct RabiTrig {
    double cos;
    double sin;
};

/// cos and sin of a Rabi angle. A value smaller than the rounding
/// resolution of the angle itself is returned as exactly zero, so trapping
/// nodes (angle a multiple of pi) give exact zeros.
RabiTrig rabi_trig(double angle) noexcept;

} // namespace retromaser
