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

#include "retromaser/prediction.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "retromaser/pom.hpp"

using namespace retromaser;

namespace {

constexpr double kPi = std::numbers::pi;

JointState excited_fock(std::size_t n, std::size_t max_photons) {
    JointState s(max_photons);
    s.excited(n) = 1.0;
    return s;
}

DetectionSequence from_mask(std::uint64_t mask, std::size_t length) {
    std::vector<AtomOutcome> outcomes(length);
    for (std::size_t i = 0; i < length; ++i)
        outcomes[i] = (mask >> i) & 1 ? AtomOutcome::Ground : AtomOutcome::Excited;
    return DetectionSequence(std::move(outcomes));
}

} // namespace

TEST(EvolveOneAtom, trapping_states_only_pick_up_a_sign) {
    const MaserParams p(kPi, 10);
    const auto e0 = evolve_one_atom(excited_fock(0, 10), p);
    EXPECT_NEAR(e0.excited(0).real(), -1.0, 1e-15);
    EXPECT_EQ(std::abs(e0.ground(1)), 0.0);
    const auto e3 = evolve_one_atom(excited_fock(3, 10), p);
    EXPECT_NEAR(e3.excited(3).real(), 1.0, 1e-15);
    EXPECT_EQ(std::abs(e3.ground(4)), 0.0);
}

TEST(EvolveOneAtom, excited_survival_probability) {
    const auto e1 = evolve_one_atom(excited_fock(1, 10), MaserParams(kPi, 10));
    EXPECT_NEAR(std::norm(e1.excited(1)), 0.070891907165591154169, 1e-15);
    EXPECT_NEAR(std::norm(e1.ground(2)), 0.92910809283440884583, 1e-15);
}

TEST(EvolveOneAtom, rotation_signs_follow_the_hamiltonian) {
    // exp(-theta (sigma_+ a - a^dagger sigma_-)) sends |e,0> to
    // cos(theta)|e,0> + sin(theta)|g,1>.
    const double theta = 0.4;
    const auto out = evolve_one_atom(excited_fock(0, 3), MaserParams(theta, 3));
    EXPECT_NEAR(out.excited(0).real(), std::cos(theta), 1e-15);
    EXPECT_NEAR(out.ground(1).real(), std::sin(theta), 1e-15);
    JointState g1(3);
    g1.ground(1) = 1.0;
    const auto back = evolve_one_atom(g1, MaserParams(theta, 3));
    EXPECT_NEAR(back.excited(0).real(), -std::sin(theta), 1e-15);
}

TEST(EvolveOneAtom, ground_vacuum_is_invariant) {
    JointState g0(5);
    g0.ground(0) = 1.0;
    const auto out = evolve_one_atom(g0, MaserParams(1.234, 5));
    EXPECT_EQ(out.ground(0), Amplitude(1.0));
    EXPECT_NEAR(out.norm_squared(), 1.0, 1e-15);
}

TEST(EvolveOneAtom, preserves_norm) {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss;
    std::uniform_int_distribution<std::size_t> cutoff(1, 50);
    std::uniform_real_distribution<double> theta(0.0, 6.0);
    for (int trial = 0; trial < 100; ++trial) {
        JointState s(cutoff(rng));
        for (auto &a : s.amplitudes()) a = {gauss(rng), gauss(rng)};
        const double norm = std::sqrt(s.norm_squared());
        for (auto &a : s.amplitudes()) a /= norm;
        const auto out = evolve_one_atom(s, MaserParams(theta(rng), 5));
        EXPECT_NEAR(out.norm_squared(), 1.0, 1e-13);
    }
}

TEST(MatrixExponential, examples) {
    EXPECT_LE(matrix_exponential_check(MaserParams(kPi, 5), 20), 1e-9);
    EXPECT_LE(matrix_exponential_check(MaserParams(0.0, 5), 20), 1e-14);
    EXPECT_LE(matrix_exponential_check(MaserParams(1.0, 5), 5), 1e-10);
}

TEST(MatrixExponential, agrees_across_angles_and_cutoffs) {
    for (double theta : {0.3, 1.0, kPi}) {
        for (std::size_t m : {5u, 20u, 60u}) {
            EXPECT_LE(matrix_exponential_check(MaserParams(theta, 5), m), 1e-9)
                << "theta=" << theta << " M=" << m;
        }
    }
}

TEST(MatrixExponential, refuses_large_cutoffs) {
    try {
        matrix_exponential_check(MaserParams(1.0, 5), 61);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
    }
}

TEST(SequenceLikelihood, examples) {
    const MaserParams p(kPi, 10);
    EXPECT_NEAR(sequence_likelihood(DetectionSequence::parse("e"), p).per_initial_n[0], 1.0, 1e-15);
    EXPECT_EQ(sequence_likelihood(DetectionSequence::parse("g"), p).per_initial_n[0], 0.0);
    EXPECT_NEAR(sequence_likelihood(DetectionSequence::parse("gg"), p).per_initial_n[1],
                0.51683458030135345573, 1e-14);
}

TEST(SequenceLikelihood, sums_to_one_over_all_sequences) {
    const MaserParams p(1.7, 20);
    for (std::size_t s = 1; s <= 8; ++s) {
        std::vector<double> total(21, 0.0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
            const auto l = sequence_likelihood(from_mask(mask, s), p);
            for (std::size_t n = 0; n <= 20; ++n) total[n] += l.per_initial_n[n];
        }
        for (std::size_t n = 0; n <= 20; ++n) EXPECT_NEAR(total[n], 1.0, 1e-11);
    }
}

TEST(SequenceLikelihood, equals_pom_coefficients) {
    for (double theta : {0.7, kPi, 2.2}) {
        const MaserParams p(theta, 30);
        for (std::size_t s = 0; s <= 6; ++s) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
                const auto seq = from_mask(mask, s);
                const auto forward = sequence_likelihood(seq, p);
                const auto pom = build_pom(seq, p);
                for (std::size_t n = 0; n <= 30; ++n)
                    ASSERT_NEAR(forward.per_initial_n[n], pom[n], 1e-12)
                        << seq.str() << " n=" << n << " theta=" << theta;
            }
        }
    }
}

TEST(SequenceLikelihood, extra_headroom_changes_nothing) {
    const MaserParams p(2.2, 15);
    for (const char *text : {"gggg", "gegeg", "eeg", "gggggg"}) {
        const auto seq = DetectionSequence::parse(text);
        const auto exact = sequence_likelihood(seq, p);
        const auto roomy = sequence_likelihood(seq, p, 15 + seq.size() + 10);
        for (std::size_t n = 0; n <= 15; ++n)
            EXPECT_NEAR(exact.per_initial_n[n], roomy.per_initial_n[n], 1e-14);
    }
    EXPECT_THROW(sequence_likelihood(DetectionSequence::parse("gg"), p, 16), Error);
}

TEST(BayesPosterior, examples) {
    const MaserParams p(kPi, 25);
    const auto fig3 = bayes_posterior(DetectionSequence::parse("gg"), PriorSpec::cap(3), p);
    EXPECT_NEAR(fig3[1], 1.0, 1e-12);

    std::vector<double> w(26);
    for (std::size_t n = 0; n <= 25; ++n) w[n] = 1.0 + n % 4;
    const FockWeights prior(w);
    const auto unchanged = bayes_posterior({}, PriorSpec::explicit_weights(prior), p);
    const auto expected = prior.normalized();
    for (std::size_t n = 0; n <= 25; ++n) EXPECT_NEAR(unchanged[n], expected[n], 1e-15);

    const auto seq = DetectionSequence::parse("egegeg");
    const auto oracle = bayes_posterior(seq, PriorSpec::uniform(), p);
    const auto retro = retrodict_state(seq, PriorSpec::uniform(), p);
    for (std::size_t n = 0; n <= 25; ++n)
        EXPECT_NEAR(oracle[n], retro.distribution()[n], 1e-10);
}

TEST(BayesPosterior, zero_evidence_is_an_error) {
    try {
        bayes_posterior(DetectionSequence::parse("g"), PriorSpec::cap(0), MaserParams(kPi, 5));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptySupport);
    }
}
