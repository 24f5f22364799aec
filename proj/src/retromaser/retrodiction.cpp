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
#include <sstream>

#include "retromaser/pom.hpp"

namespace retromaser {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

void require_matching_size(const FockWeights &w, const MaserParams &params,
                           const char *what) {
    if (w.size() != params.n_max() + 1) {
        std::ostringstream msg;
        msg << what << " has " << w.size() << " entries, expected n_max+1 = "
            << params.n_max() + 1;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

} // namespace

FockWeights PriorSpec::weights(const MaserParams &params) const {
    return std::visit(
        overloaded{
            [&](const Uniform &) { return FockWeights::ones(params.n_max()); },
            [&](const Cap &c) {
                if (c.max_n > params.n_max()) {
                    std::ostringstream msg;
                    msg << "prior cap " << c.max_n << " exceeds n_max "
                        << params.n_max();
                    throw Error(ErrorCode::InvalidArgument, msg.str());
                }
                std::vector<double> w(params.n_max() + 1, 0.0);
                std::fill(w.begin(), w.begin() + c.max_n + 1, 1.0);
                return FockWeights(std::move(w));
            },
            [&](const Explicit &e) {
                require_matching_size(e.weights, params, "explicit prior");
                return e.weights;
            },
        },
        kind_);
}

std::string PriorSpec::describe() const {
    return std::visit(overloaded{
                          [](const Uniform &) { return std::string("uniform"); },
                          [](const Cap &c) { return "cap:" + std::to_string(c.max_n); },
                          [](const Explicit &) { return std::string("explicit"); },
                      },
                      kind_);
}

RetrodictiveState::RetrodictiveState(const FockWeights &weights,
                                     DetectionSequence sequence, PriorSpec prior)
    : sequence_(std::move(sequence)), prior_(std::move(prior)) {
    if (weights.empty_support()) {
        std::ostringstream msg;
        msg << "detection sequence '" << sequence_.str()
            << "' is impossible under prior " << prior_.describe()
            << ": no photon number has nonzero probability";
        throw Error(ErrorCode::EmptySupport, msg.str());
    }
    distribution_ = weights.normalized();
}

FockWeights backward_update(const FockWeights &after, AtomOutcome outcome,
                            const MaserParams &params) {
    require_matching_size(after, params, "photon-number weights");
    const std::size_t size = after.size();
    std::vector<double> before(size, 0.0);
    for (std::size_t n = 0; n < size; ++n) {
        if (outcome == AtomOutcome::Excited) {
            before[n] = after[n] * c_factor(n, 1, params);
        } else {
            const double above = n + 1 < size ? after[n + 1] : 0.0;
            before[n] = above * s_factor(n, 1, params);
        }
    }
    return FockWeights(std::move(before));
}

FockWeights retrodict_with_final(const FockWeights &final_weights,
                                 const DetectionSequence &seq,
                                 const MaserParams &params) {
    require_matching_size(final_weights, params, "final-field weights");
    FockWeights current = final_weights;
    const auto outcomes = seq.outcomes();
    for (auto it = outcomes.rbegin(); it != outcomes.rend(); ++it) {
        current = backward_update(current, *it, params);
    }
    return current;
}

RetrodictiveState retrodict_state(const DetectionSequence &seq,
                                  const PriorSpec &prior,
                                  const MaserParams &params) {
    if (seq.ground_count() > params.n_max()) {
        std::ostringstream msg;
        msg << "detection sequence '" << seq.str() << "' has "
            << seq.ground_count() << " ground detections, more than n_max="
            << params.n_max() << " photons can account for";
        throw Error(ErrorCode::EmptySupport, msg.str());
    }
    const FockWeights prior_weights = prior.weights(params);
    const PomElement pom = build_pom(seq, params);
    std::vector<double> posterior(prior_weights.size());
    for (std::size_t n = 0; n < posterior.size(); ++n) {
        posterior[n] = prior_weights[n] * pom[n];
    }
    return RetrodictiveState(FockWeights(std::move(posterior)), seq, prior);
}

SupportReport support_report(const RetrodictiveState &state) {
    const auto p = state.distribution().values();
    SupportReport report{};
    std::size_t n = 0;
    while (p[n] == 0.0) {
        ++n; // a RetrodictiveState always has a nonzero entry
    }
    report.min_n = n;
    report.implied_final_min = n + state.sequence().ground_count();
    for (++n; n < p.size(); ++n) {
        if (p[n] != 0.0) {
            continue;
        }
        const std::size_t first = n;
        while (n + 1 < p.size() && p[n + 1] == 0.0) {
            ++n;
        }
        report.gaps.push_back({first, n});
    }
    return report;
}

} // namespace retromaser
