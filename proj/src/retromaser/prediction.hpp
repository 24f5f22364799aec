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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "retromaser/retrodiction.hpp"
#include "retromaser/types.hpp"

namespace retromaser {

/**
 * Forward (predictive) engine. It propagates atom-field amplitudes through
 * the resonant Jaynes-Cummings unitary one atom at a time and never touches
 * the POM coefficient code, so it serves as an independent oracle for the
 * retrodictive results.
 */

using Amplitude = std::complex<double>;

/// Pure atom-field state over |e,0>..|e,M>, |g,0>..|g,M>.
class JointState {
  public:
    explicit JointState(std::size_t max_photons)
        : max_photons_(max_photons), amplitudes_(2 * (max_photons + 1)) {}

    /// Fresh excited atom next to the given field amplitudes. The field
    /// vector must have max_photons + 1 entries.
    static JointState excited_atom(std::span<const Amplitude> field);

    std::size_t max_photons() const noexcept { return max_photons_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }

    Amplitude &excited(std::size_t n) { return amplitudes_[n]; }
    Amplitude excited(std::size_t n) const { return amplitudes_[n]; }
    Amplitude &ground(std::size_t n) { return amplitudes_[max_photons_ + 1 + n]; }
    Amplitude ground(std::size_t n) const { return amplitudes_[max_photons_ + 1 + n]; }

    std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
    std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }

    double norm_squared() const noexcept;

    /// Field amplitudes conditioned on the atomic outcome (not renormalized).
    std::vector<Amplitude> project(AtomOutcome outcome) const;

  private:
    std::size_t max_photons_;
    std::vector<Amplitude> amplitudes_;
};

/**
 * One atom's passage: the resonant Jaynes-Cummings unitary exp(-i H tau)
 * with H = -i lambda (sigma_+ a - a^dagger sigma_-). Within each block
 * {|e,n>, |g,n+1>}, with phi = theta sqrt(n+1):
 *   |e,n>   -> cos(phi) |e,n> + sin(phi) |g,n+1>
 *   |g,n+1> -> -sin(phi) |e,n> + cos(phi) |g,n+1>
 * |g,0> is invariant. |e,M> has no partner inside the truncated space and is
 * left invariant, matching the truncated Hamiltonian.
 */
JointState evolve_one_atom(const JointState &state, const MaserParams &params);

/// Largest photon cutoff accepted by matrix_exponential_check.
inline constexpr std::size_t kMaxDenseCutoff = 60;

/// Max |entry| difference between the closed-form unitary of
/// evolve_one_atom and a dense eigendecomposition exponential of the
/// Hamiltonian, both on photon numbers 0..max_photons.
double matrix_exponential_check(const MaserParams &params, std::size_t max_photons);

struct SequenceLikelihood {
    /// P(seq | n photons initially), n = 0..n_max.
    std::vector<double> per_initial_n;
};

/// Runs each initial Fock state |n> forward through the atoms, projecting
/// each atom onto its detected outcome before the next fresh excited atom
/// arrives. Uses photon headroom n_max + seq.size(), which is exact.
SequenceLikelihood sequence_likelihood(const DetectionSequence &seq,
                                       const MaserParams &params);

/// Same as above with an explicit photon headroom (must be at least
/// n_max + seq.size()).
SequenceLikelihood sequence_likelihood(const DetectionSequence &seq,
                                       const MaserParams &params,
                                       std::size_t max_photons);

/// Bayes' theorem on the forward likelihoods: posterior_n proportional to
/// prior_n P(seq|n). Zero evidence is Error(EmptySupport).
FockWeights bayes_posterior(const DetectionSequence &seq, const PriorSpec &prior,
                            const MaserParams &params);

} // namespace retromaser
