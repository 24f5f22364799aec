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

#include "retromaser/retrodiction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "retromaser/pom.hpp"

using namespace retromaser;

namespace {

constexpr double kPi = std::numbers::pi;

DetectionSequence random_sequence(std::mt19937_64 &rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::bernoulli_distribution ground(0.5);
    std::vector<AtomOutcome> outcomes(len(rng));
    for (auto &o : outcomes) o = ground(rng) ? AtomOutcome::Ground : AtomOutcome::Excited;
    return DetectionSequence(std::move(outcomes));
}

bool is_square(std::size_t v) {
    const auto r = static_cast<std::size_t>(std::llround(std::sqrt(double(v))));
    return r * r == v;
}

} // namespace

TEST(BackwardUpdate, excited_from_uniform) {
    const MaserParams p(kPi, 10);
    const auto out = backward_update(FockWeights::ones(10), AtomOutcome::Excited, p);
    EXPECT_EQ(out[0], 1.0);
    EXPECT_NEAR(out[1], 0.070891907165591154169, 1e-15);
    EXPECT_EQ(out[3], 1.0);
    EXPECT_EQ(out[8], 1.0);
}

TEST(BackwardUpdate, ground_from_uniform_zeros_trapping_numbers) {
    const MaserParams p(kPi, 25);
    const auto out = backward_update(FockWeights::ones(25), AtomOutcome::Ground, p);
    for (std::size_t n : {0u, 3u, 8u, 15u, 24u}) EXPECT_EQ(out[n], 0.0) << n;
    EXPECT_GT(out[1], 0.0);
    // top fill: nothing above n_max feeds n_max
    EXPECT_EQ(out[25], 0.0);
}

TEST(BackwardUpdate, trapping_state_forbids_ground_exit) {
    const MaserParams p(kPi, 10);
    const auto out = backward_update(FockWeights::point_mass(10, 1), AtomOutcome::Ground, p);
    EXPECT_TRUE(out.empty_support());
}

TEST(BackwardUpdate, rejects_wrong_length) {
    EXPECT_THROW(backward_update(FockWeights::ones(4), AtomOutcome::Ground, MaserParams(1.0, 5)),
                 Error);
}

TEST(RetrodictWithFinal, examples) {
    const MaserParams p(kPi, 30);
    const auto eg = retrodict_with_final(FockWeights::ones(30), DetectionSequence::parse("eg"), p);
    for (std::size_t n = 0; n < 30; ++n) {
        const double c = std::cos(kPi * std::sqrt(n + 1.0));
        const double s = std::sin(kPi * std::sqrt(n + 1.0));
        EXPECT_NEAR(eg[n], c * c * s * s, 1e-14) << n;
    }
    const auto none = retrodict_with_final(FockWeights::ones(30), {}, p);
    EXPECT_EQ(none, FockWeights::ones(30));

    const auto six = retrodict_with_final(FockWeights::ones(30),
                                          DetectionSequence::parse("gggggg"), p);
    for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(six[n], 0.0) << n;
    EXPECT_GT(six[9], 0.0);
}

TEST(RetrodictWithFinal, reverse_iteration_equals_coefficient_product) {
    std::mt19937_64 rng(2024);
    const std::array<double, 3> thetas{0.7, kPi, 2.2};
    for (int trial = 0; trial < 200; ++trial) {
        const MaserParams p(thetas[trial % 3], 40);
        const auto seq = random_sequence(rng, 8);
        const auto pom = build_pom(seq, p);
        const auto back = retrodict_with_final(FockWeights::ones(40), seq, p);
        const std::size_t grounds = seq.ground_count();
        for (std::size_t n = 0; n <= 40; ++n) {
            // identity final weights truncated at n_max
            const double expected = n + grounds <= 40 ? pom[n] : 0.0;
            EXPECT_NEAR(back[n], expected, 1e-13) << seq.str() << " n=" << n;
        }
    }
}

TEST(RetrodictWithFinal, shift_law_with_general_final_weights) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const MaserParams p(1.9, 30);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<double> w(31);
        for (auto &x : w) x = u(rng);
        const FockWeights final_weights(w);
        const auto seq = random_sequence(rng, 6);
        const auto pom = build_pom(seq, p);
        const auto back = retrodict_with_final(final_weights, seq, p);
        for (std::size_t n = 0; n <= 30; ++n) {
            const std::size_t shifted = n + seq.ground_count();
            const double expected = shifted <= 30 ? pom[n] * w[shifted] : 0.0;
            EXPECT_NEAR(back[n], expected, 1e-13);
        }
    }
}

TEST(RetrodictWithFinal, too_many_grounds_gives_flagged_empty_support) {
    const MaserParams p(1.0, 3);
    const auto back = retrodict_with_final(FockWeights::ones(3), DetectionSequence::parse("gggg"), p);
    EXPECT_TRUE(back.empty_support());
}

TEST(RetrodictState, two_grounds_with_cap_give_one_photon_for_certain) {
    const auto state = retrodict_state(DetectionSequence::parse("gg"), PriorSpec::cap(3),
                                       MaserParams(kPi, 25));
    EXPECT_NEAR(state.distribution()[1], 1.0, 1e-12);
    for (std::size_t n = 0; n <= 25; ++n)
        if (n != 1) EXPECT_EQ(state.distribution()[n], 0.0);
}

TEST(RetrodictState, no_detections_return_prior) {
    const auto state = retrodict_state({}, PriorSpec::uniform(), MaserParams(1.0, 9));
    for (double v : state.distribution().values()) EXPECT_NEAR(v, 0.1, 1e-15);
}

TEST(RetrodictState, alternating_six_atoms_within_plotted_range) {
    // Photon numbers 0..15: significant mass only on 4-5 and 9-12.
    const std::set<std::size_t> expected{4, 5, 9, 10, 11, 12};
    for (const char *text : {"gegege", "egegeg"}) {
        const auto state = retrodict_state(DetectionSequence::parse(text),
                                           PriorSpec::uniform(), MaserParams(kPi, 15));
        const auto p = state.distribution().values();
        const double peak = *std::max_element(p.begin(), p.end());
        std::set<std::size_t> significant;
        for (std::size_t n = 0; n < p.size(); ++n)
            if (p[n] >= 1e-3 * peak) significant.insert(n);
        EXPECT_EQ(significant, expected) << text;
    }
}

TEST(RetrodictState, larger_cutoffs_reach_the_next_resonance_band) {
    // Above 15 photons the same sequences pick up weight near 16-20, which
    // is why the alternating-sequence band structure depends on the cutoff.
    const auto state = retrodict_state(DetectionSequence::parse("egegeg"),
                                       PriorSpec::uniform(), MaserParams(kPi, 20));
    const auto p = state.distribution().values();
    EXPECT_EQ(std::max_element(p.begin(), p.end()) - p.begin(), 16);
}

TEST(RetrodictState, empty_posterior_names_sequence_and_prior) {
    try {
        retrodict_state(DetectionSequence::parse("g"), PriorSpec::cap(0), MaserParams(kPi, 10));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptySupport);
        const std::string msg = e.what();
        EXPECT_NE(msg.find("'g'"), std::string::npos);
        EXPECT_NE(msg.find("cap:0"), std::string::npos);
    }
}

TEST(RetrodictState, more_grounds_than_cutoff_is_empty_support) {
    try {
        retrodict_state(DetectionSequence::parse("ggg"), PriorSpec::uniform(), MaserParams(1.0, 2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptySupport);
    }
}

TEST(RetrodictState, prior_validation) {
    const MaserParams p(1.0, 5);
    EXPECT_THROW(retrodict_state({}, PriorSpec::cap(6), p), Error);
    EXPECT_THROW(retrodict_state({}, PriorSpec::explicit_weights(FockWeights::ones(4)), p), Error);
    EXPECT_EQ(PriorSpec::cap(3).describe(), "cap:3");
    EXPECT_EQ(PriorSpec::uniform().describe(), "uniform");
}

TEST(RetrodictState, support_never_exceeds_prior_support) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const MaserParams p(2.2, 20);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> w(21);
        for (auto &x : w) x = u(rng) < 0.4 ? 0.0 : u(rng);
        w[trial % 21] = 1.0;
        const FockWeights prior(w);
        const auto seq = random_sequence(rng, 6);
        try {
            const auto state = retrodict_state(seq, PriorSpec::explicit_weights(prior), p);
            for (std::size_t n = 0; n <= 20; ++n)
                if (w[n] == 0.0) EXPECT_EQ(state.distribution()[n], 0.0);
            EXPECT_NEAR(state.distribution().total(), 1.0, 1e-12);
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::EmptySupport);
        }
    }
}

TEST(RetrodictState, order_sensitivity) {
    const MaserParams p(kPi, 25);
    const auto eg = retrodict_state(DetectionSequence::parse("eg"), PriorSpec::uniform(), p);
    const auto ge = retrodict_state(DetectionSequence::parse("ge"), PriorSpec::uniform(), p);
    double worst = 0.0;
    for (std::size_t n = 0; n <= 25; ++n)
        worst = std::max(worst, std::abs(eg.distribution()[n] - ge.distribution()[n]));
    EXPECT_GT(worst, 1e-3);
}

TEST(SupportReport, three_grounds) {
    const auto state = retrodict_state(DetectionSequence::parse("ggg"), PriorSpec::uniform(),
                                       MaserParams(kPi, 25));
    const auto report = support_report(state);
    EXPECT_EQ(report.min_n, 4u);
    ASSERT_FALSE(report.gaps.empty());
    EXPECT_EQ(report.gaps[0], (PhotonRange{6, 8}));
    EXPECT_EQ(report.implied_final_min, 7u);
}

TEST(SupportReport, six_grounds_imply_fifteen_photons_afterwards) {
    const auto state = retrodict_state(DetectionSequence::parse("gggggg"),
                                       PriorSpec::uniform(), MaserParams(kPi, 25));
    const auto report = support_report(state);
    EXPECT_EQ(report.min_n, 9u);
    EXPECT_EQ(report.implied_final_min, 15u);
    EXPECT_EQ(report.gaps, (std::vector<PhotonRange>{{10, 15}, {19, 24}}));
}

TEST(SupportReport, single_excited_has_no_leading_gap) {
    const auto state = retrodict_state(DetectionSequence::parse("e"), PriorSpec::uniform(),
                                       MaserParams(kPi, 25));
    const auto report = support_report(state);
    EXPECT_EQ(report.min_n, 0u);
    EXPECT_TRUE(report.gaps.empty());
    EXPECT_EQ(report.implied_final_min, 0u);
}

TEST(SupportReport, ground_shift_accounting_by_brute_force) {
    for (std::size_t k = 1; k <= 8; ++k) {
        std::size_t expected = 0;
        auto blocked = [&](std::size_t n) {
            for (std::size_t j = 1; j <= k; ++j)
                if (is_square(n + j)) return true;
            return false;
        };
        while (blocked(expected)) ++expected;
        const auto state = retrodict_state(DetectionSequence(std::vector(k, AtomOutcome::Ground)),
                                           PriorSpec::uniform(), MaserParams(kPi, 40));
        EXPECT_EQ(support_report(state).min_n, expected) << "k=" << k;
    }
}
