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

#include "retromaser/retromaser.h"

#include <exception>
#include <new>
#include <optional>
#include <string>

#include "retromaser/figures.hpp"
#include "retromaser/pom.hpp"
#include "retromaser/prediction.hpp"
#include "retromaser/retrodiction.hpp"
#include "retromaser/types.hpp"
#include "retromaser/verify.hpp"

using namespace retromaser;

struct rm_params_s {
    MaserParams value;
};
struct rm_sequence_s {
    DetectionSequence value;
    std::string text;
};
struct rm_prior_s {
    PriorSpec value;
    std::string description;
};
struct rm_weights_s {
    FockWeights value;
};
struct rm_state_s {
    RetrodictiveState value;
    SupportReport support;
    rm_weights_s distribution;
};
struct rm_report_s {
    VerificationReport value;
};

namespace {

thread_local std::string g_last_error;

rm_status fail(rm_status status, const std::string &message) {
    g_last_error = message;
    return status;
}

rm_status to_status(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return RM_ERR_INVALID_ARGUMENT;
    case ErrorCode::EmptySupport: return RM_ERR_EMPTY_SUPPORT;
    case ErrorCode::BoundExceeded: return RM_ERR_BOUND_EXCEEDED;
    case ErrorCode::Internal: return RM_ERR_INTERNAL;
    }
    return RM_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <class Body> rm_status guarded(Body &&body) {
    try {
        body();
        g_last_error.clear();
        return RM_OK;
    } catch (const Error &e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(RM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(RM_ERR_INTERNAL, e.what());
    }
}

#define RM_REQUIRE(ptr)                                                        \
    do {                                                                       \
        if ((ptr) == nullptr)                                                  \
            return fail(RM_ERR_INVALID_ARGUMENT, #ptr " must not be NULL");    \
    } while (0)

rm_weights_t new_weights(FockWeights w) { return new rm_weights_s{std::move(w)}; }

} // namespace

extern "C" {

const char *rm_version(void) { return "0.1.0"; }

const char *rm_status_string(rm_status status) {
    switch (status) {
    case RM_OK: return "ok";
    case RM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RM_ERR_EMPTY_SUPPORT: return "impossible event (empty support)";
    case RM_ERR_BOUND_EXCEEDED: return "size bound exceeded";
    case RM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char *rm_last_error(void) { return g_last_error.c_str(); }

rm_status rm_params_create(double theta, size_t n_max, double detuning,
                           rm_params_t *out) {
    RM_REQUIRE(out);
    return guarded([&] { *out = new rm_params_s{MaserParams(theta, n_max, detuning)}; });
}

void rm_params_destroy(rm_params_t params) { delete params; }
double rm_params_theta(rm_params_t params) { return params ? params->value.theta() : 0.0; }
size_t rm_params_n_max(rm_params_t params) { return params ? params->value.n_max() : 0; }

rm_status rm_sequence_parse(const char *text, rm_sequence_t *out) {
    RM_REQUIRE(text);
    RM_REQUIRE(out);
    return guarded([&] {
        auto seq = DetectionSequence::parse(text);
        auto str = seq.str();
        *out = new rm_sequence_s{std::move(seq), std::move(str)};
    });
}

void rm_sequence_destroy(rm_sequence_t seq) { delete seq; }
size_t rm_sequence_length(rm_sequence_t seq) { return seq ? seq->value.size() : 0; }
size_t rm_sequence_ground_count(rm_sequence_t seq) {
    return seq ? seq->value.ground_count() : 0;
}
const char *rm_sequence_string(rm_sequence_t seq) { return seq ? seq->text.c_str() : ""; }

rm_status rm_weights_create(const double *values, size_t size, rm_weights_t *out) {
    RM_REQUIRE(values);
    RM_REQUIRE(out);
    return guarded([&] {
        *out = new_weights(FockWeights(std::vector<double>(values, values + size)));
    });
}

void rm_weights_destroy(rm_weights_t weights) { delete weights; }
size_t rm_weights_size(rm_weights_t weights) { return weights ? weights->value.size() : 0; }
const double *rm_weights_data(rm_weights_t weights) {
    return weights ? weights->value.values().data() : nullptr;
}
double rm_weights_total(rm_weights_t weights) { return weights ? weights->value.total() : 0.0; }
int rm_weights_empty_support(rm_weights_t weights) {
    return weights == nullptr || weights->value.empty_support() ? 1 : 0;
}

rm_status rm_weights_normalized(rm_weights_t weights, rm_weights_t *out) {
    RM_REQUIRE(weights);
    RM_REQUIRE(out);
    return guarded([&] { *out = new_weights(weights->value.normalized()); });
}

rm_status rm_prior_uniform(rm_prior_t *out) {
    RM_REQUIRE(out);
    return guarded([&] {
        auto prior = PriorSpec::uniform();
        auto text = prior.describe();
        *out = new rm_prior_s{std::move(prior), std::move(text)};
    });
}

rm_status rm_prior_cap(size_t max_n, rm_prior_t *out) {
    RM_REQUIRE(out);
    return guarded([&] {
        auto prior = PriorSpec::cap(max_n);
        auto text = prior.describe();
        *out = new rm_prior_s{std::move(prior), std::move(text)};
    });
}

rm_status rm_prior_explicit(rm_weights_t weights, rm_prior_t *out) {
    RM_REQUIRE(weights);
    RM_REQUIRE(out);
    return guarded([&] {
        auto prior = PriorSpec::explicit_weights(weights->value);
        auto text = prior.describe();
        *out = new rm_prior_s{std::move(prior), std::move(text)};
    });
}

void rm_prior_destroy(rm_prior_t prior) { delete prior; }
const char *rm_prior_describe(rm_prior_t prior) {
    return prior ? prior->description.c_str() : "";
}

rm_status rm_rabi_frequency_factor(rm_params_t params, size_t n, unsigned m,
                                   double *out) {
    RM_REQUIRE(params);
    RM_REQUIRE(out);
    return guarded([&] { *out = rabi_frequency_factor(n, m, params->value); });
}

rm_status rm_c_factor(rm_params_t params, size_t n, unsigned m, double *out) {
    RM_REQUIRE(params);
    RM_REQUIRE(out);
    return guarded([&] { *out = c_factor(n, m, params->value); });
}

rm_status rm_s_factor(rm_params_t params, size_t n, unsigned m, double *out) {
    RM_REQUIRE(params);
    RM_REQUIRE(out);
    return guarded([&] { *out = s_factor(n, m, params->value); });
}

rm_status rm_build_pom(rm_params_t params, rm_sequence_t seq, rm_weights_t *coefficients) {
    RM_REQUIRE(params);
    RM_REQUIRE(seq);
    RM_REQUIRE(coefficients);
    return guarded([&] {
        *coefficients = new_weights(build_pom(seq->value, params->value).coefficients());
    });
}

rm_status rm_completeness_check(rm_params_t params, size_t length, double *deviation) {
    RM_REQUIRE(params);
    RM_REQUIRE(deviation);
    return guarded([&] { *deviation = completeness_check(length, params->value); });
}

rm_status rm_table1_deviation(rm_params_t params, const char *row, double *deviation) {
    RM_REQUIRE(params);
    RM_REQUIRE(row);
    RM_REQUIRE(deviation);
    const auto parsed = parse_table1_row(row);
    if (!parsed) {
        return fail(RM_ERR_INVALID_ARGUMENT,
                    std::string("unknown two-atom row '") + row +
                        "', expected ee, gg, eg or ge");
    }
    return guarded([&] { *deviation = table1_deviation(*parsed, params->value); });
}

rm_status rm_backward_update(rm_params_t params, rm_weights_t after, rm_outcome outcome,
                             rm_weights_t *before) {
    RM_REQUIRE(params);
    RM_REQUIRE(after);
    RM_REQUIRE(before);
    if (outcome != RM_EXCITED && outcome != RM_GROUND) {
        return fail(RM_ERR_INVALID_ARGUMENT, "outcome must be RM_EXCITED or RM_GROUND");
    }
    return guarded([&] {
        const auto o = outcome == RM_EXCITED ? AtomOutcome::Excited : AtomOutcome::Ground;
        *before = new_weights(backward_update(after->value, o, params->value));
    });
}

rm_status rm_retrodict_with_final(rm_params_t params, rm_weights_t final_weights,
                                  rm_sequence_t seq, rm_weights_t *initial) {
    RM_REQUIRE(params);
    RM_REQUIRE(final_weights);
    RM_REQUIRE(seq);
    RM_REQUIRE(initial);
    return guarded([&] {
        *initial = new_weights(
            retrodict_with_final(final_weights->value, seq->value, params->value));
    });
}

rm_status rm_retrodict_state(rm_params_t params, rm_sequence_t seq, rm_prior_t prior,
                             rm_state_t *out) {
    RM_REQUIRE(params);
    RM_REQUIRE(seq);
    RM_REQUIRE(prior);
    RM_REQUIRE(out);
    return guarded([&] {
        auto state = retrodict_state(seq->value, prior->value, params->value);
        auto support = support_report(state);
        auto distribution = state.distribution();
        *out = new rm_state_s{std::move(state), std::move(support),
                              rm_weights_s{std::move(distribution)}};
    });
}

void rm_state_destroy(rm_state_t state) { delete state; }

rm_weights_t rm_state_distribution(rm_state_t state) {
    return state ? &state->distribution : nullptr;
}

void rm_state_support(rm_state_t state, size_t *min_n, size_t *implied_final_min,
                      size_t *gap_count) {
    if (state == nullptr) return;
    if (min_n) *min_n = state->support.min_n;
    if (implied_final_min) *implied_final_min = state->support.implied_final_min;
    if (gap_count) *gap_count = state->support.gaps.size();
}

rm_status rm_state_gap(rm_state_t state, size_t index, size_t *first, size_t *last) {
    RM_REQUIRE(state);
    RM_REQUIRE(first);
    RM_REQUIRE(last);
    if (index >= state->support.gaps.size()) {
        return fail(RM_ERR_INVALID_ARGUMENT, "gap index out of range");
    }
    *first = state->support.gaps[index].first;
    *last = state->support.gaps[index].last;
    return RM_OK;
}

rm_status rm_sequence_likelihood(rm_params_t params, rm_sequence_t seq,
                                 rm_weights_t *likelihood) {
    RM_REQUIRE(params);
    RM_REQUIRE(seq);
    RM_REQUIRE(likelihood);
    return guarded([&] {
        auto result = sequence_likelihood(seq->value, params->value);
        *likelihood = new_weights(FockWeights(std::move(result.per_initial_n)));
    });
}

rm_status rm_bayes_posterior(rm_params_t params, rm_sequence_t seq, rm_prior_t prior,
                             rm_weights_t *posterior) {
    RM_REQUIRE(params);
    RM_REQUIRE(seq);
    RM_REQUIRE(prior);
    RM_REQUIRE(posterior);
    return guarded([&] {
        *posterior = new_weights(bayes_posterior(seq->value, prior->value, params->value));
    });
}

rm_status rm_matrix_exponential_check(rm_params_t params, size_t max_photons,
                                      double *deviation) {
    RM_REQUIRE(params);
    RM_REQUIRE(deviation);
    return guarded(
        [&] { *deviation = matrix_exponential_check(params->value, max_photons); });
}

size_t rm_figure_count(void) { return figure_table().size(); }

rm_status rm_figure_info(size_t index, const char **id, const char **sequence,
                         long *prior_cap) {
    const auto table = figure_table();
    if (index >= table.size()) {
        return fail(RM_ERR_INVALID_ARGUMENT, "figure index out of range");
    }
    // The table's string_views point at NUL-terminated literals.
    const auto &figure = table[index];
    if (id) *id = figure.id.data();
    if (sequence) *sequence = figure.sequence.data();
    if (prior_cap) *prior_cap = figure.prior_cap ? static_cast<long>(*figure.prior_cap) : -1;
    return RM_OK;
}

rm_status rm_figure_find(const char *id, size_t *index) {
    RM_REQUIRE(id);
    RM_REQUIRE(index);
    const auto *figure = find_figure(id);
    if (figure == nullptr) {
        return fail(RM_ERR_INVALID_ARGUMENT, std::string("unknown figure id '") + id + "'");
    }
    *index = static_cast<size_t>(figure - figure_table().data());
    return RM_OK;
}

rm_status rm_verify(rm_params_t params, rm_report_t *out) {
    RM_REQUIRE(params);
    RM_REQUIRE(out);
    return guarded([&] { *out = new rm_report_s{run_verification(params->value)}; });
}

void rm_report_destroy(rm_report_t report) { delete report; }
size_t rm_report_count(rm_report_t report) {
    return report ? report->value.checks.size() : 0;
}
int rm_report_passed(rm_report_t report) {
    return report && report->value.passed() ? 1 : 0;
}

rm_status rm_report_check(rm_report_t report, size_t index, const char **name,
                          int *passed, double *value, double *tolerance,
                          const char **detail) {
    RM_REQUIRE(report);
    if (index >= report->value.checks.size()) {
        return fail(RM_ERR_INVALID_ARGUMENT, "check index out of range");
    }
    const auto &check = report->value.checks[index];
    if (name) *name = check.name.c_str();
    if (passed) *passed = check.passed ? 1 : 0;
    if (value) *value = check.value;
    if (tolerance) *tolerance = check.tolerance;
    if (detail) *detail = check.detail.c_str();
    return RM_OK;
}

} // extern "C"
