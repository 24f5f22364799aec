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
#include <string>
#include <variant>
#include <vector>

#include "retromaser/types.hpp"

namespace retromaser {

/// Prior over the photon number in the cavity before the first atom enters.
class PriorSpec {
  public:
    struct Uniform {};
    struct Cap {
        std::size_t max_n;
    };
    struct Explicit {
        FockWeights weights;
    };
    using Kind = std::variant<Uniform, Cap, Explicit>;

    static PriorSpec uniform() { return PriorSpec(Uniform{}); }
    static PriorSpec cap(std::size_t max_n) { return PriorSpec(Cap{max_n}); }
    static PriorSpec explicit_weights(FockWeights weights) {
        return PriorSpec(Explicit{std::move(weights)});
    }

    const Kind &kind() const noexcept { return kind_; }

    /// Weights over 0..params.n_max(). Throws InvalidArgument when a cap
    /// exceeds n_max or explicit weights have the wrong length.
    FockWeights weights(const MaserParams &params) const;

    /// "uniform", "cap:K" or "explicit".
    std::string describe() const;

  private:
    explicit PriorSpec(Kind kind) : kind_(std::move(kind)) {}
    Kind kind_;
};

/**
 * Normalized photon-number distribution of the field when the first atom
 * entered, given the detections and the prior. Construction is the single
 * place where normalization happens.
 */
class RetrodictiveState {
  public:
    /// Normalizes `weights`; an all-zero vector is Error(EmptySupport) with a
    /// message naming the sequence and the prior.
    RetrodictiveState(const FockWeights &weights, DetectionSequence sequence,
                      PriorSpec prior);

    const FockWeights &distribution() const noexcept { return distribution_; }
    const DetectionSequence &sequence() const noexcept { return sequence_; }
    const PriorSpec &prior() const noexcept { return prior_; }

  private:
    FockWeights distribution_;
    DetectionSequence sequence_;
    PriorSpec prior_;
};

/**
 * One atom, traced backwards: maps photon-number weights after the atom left
 * to weights before it entered.
 *   Excited: out_n = in_n     cos^2(theta sqrt(n+1))
 *   Ground:  out_n = in_{n+1} sin^2(theta sqrt(n+1)), in_{n_max+1} == 0
 * The result is unnormalized and may have empty support.
 */
FockWeights backward_update(const FockWeights &after, AtomOutcome outcome,
                            const MaserParams &params);

/// Applies backward_update for each atom, last detection first, starting
/// from the final-field weights. Equal to C_{n,seq} final[n + grounds].
FockWeights retrodict_with_final(const FockWeights &final_weights,
                                 const DetectionSequence &seq,
                                 const MaserParams &params);

/// prior_n * C_{n,seq}, normalized. Throws EmptySupport when the prior rules
/// out every photon number compatible with the detections, or when the
/// sequence has more ground detections than n_max.
RetrodictiveState retrodict_state(const DetectionSequence &seq,
                                  const PriorSpec &prior,
                                  const MaserParams &params);

struct PhotonRange {
    std::size_t first;
    std::size_t last; // inclusive

    friend bool operator==(const PhotonRange &, const PhotonRange &) = default;
};

struct SupportReport {
    std::size_t min_n;
    /// Maximal runs of zero probability above min_n, up to n_max.
    std::vector<PhotonRange> gaps;
    /// Lowest photon number the cavity can hold after the last atom:
    /// min_n plus one photon per ground detection.
    std::size_t implied_final_min;
};

SupportReport support_report(const RetrodictiveState &state);

} // namespace retromaser
