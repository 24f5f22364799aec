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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

namespace retromaser {

namespace {

struct Rotation {
    double cos;
    double sin;
};

// Same rounding floor as the coefficient path so that trapping nodes give
// exact zeros, but computed here so the oracle shares no code with it.
Rotation rotation(double angle) {
    const double floor =
        8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(angle));
    Rotation r{std::cos(angle), std::sin(angle)};
    if (std::abs(r.cos) < floor) r.cos = 0.0;
    if (std::abs(r.sin) < floor) r.sin = 0.0;
    return r;
}

} // namespace

JointState JointState::excited_atom(std::span<const Amplitude> field) {
    if (field.empty()) {
        throw Error(ErrorCode::InvalidArgument, "field state has no amplitudes");
    }
    JointState state(field.size() - 1);
    std::copy(field.begin(), field.end(), state.amplitudes_.begin());
    return state;
}

double JointState::norm_squared() const noexcept {
    double sum = 0.0;
    for (const auto &a : amplitudes_) {
        sum += std::norm(a);
    }
    return sum;
}

std::vector<Amplitude> JointState::project(AtomOutcome outcome) const {
    const auto begin = amplitudes_.begin() +
                       (outcome == AtomOutcome::Excited ? 0 : max_photons_ + 1);
    return std::vector<Amplitude>(begin, begin + max_photons_ + 1);
}

JointState evolve_one_atom(const JointState &state, const MaserParams &params) {
    if (params.detuning() != 0.0) {
        throw Error(ErrorCode::InvalidArgument,
                    "closed-form evolution requires zero detuning");
    }
    JointState out = state;
    for (std::size_t n = 0; n < state.max_photons(); ++n) {
        const auto r = rotation(params.theta() * std::sqrt(static_cast<double>(n + 1)));
        const Amplitude e = state.excited(n);
        const Amplitude g = state.ground(n + 1);
        out.excited(n) = r.cos * e - r.sin * g;
        out.ground(n + 1) = r.sin * e + r.cos * g;
    }
    return out;
}

double matrix_exponential_check(const MaserParams &params, std::size_t max_photons) {
    if (max_photons > kMaxDenseCutoff) {
        std::ostringstream msg;
        msg << "dense exponential check is limited to photon cutoff "
            << kMaxDenseCutoff << ", got " << max_photons;
        throw Error(ErrorCode::BoundExceeded, msg.str());
    }
    using Matrix = Eigen::MatrixXcd;
    const auto dim = static_cast<Eigen::Index>(2 * (max_photons + 1));
    const auto g_index = [&](std::size_t n) {
        return static_cast<Eigen::Index>(max_photons + 1 + n);
    };
    const Amplitude i_unit(0.0, 1.0);

    // H tau / hbar = -i theta (sigma_+ a - a^dagger sigma_-)
    Matrix generator = Matrix::Zero(dim, dim);
    for (std::size_t n = 0; n < max_photons; ++n) {
        const double coupling = params.theta() * std::sqrt(static_cast<double>(n + 1));
        const auto e = static_cast<Eigen::Index>(n);
        generator(e, g_index(n + 1)) = -i_unit * coupling;
        generator(g_index(n + 1), e) = i_unit * coupling;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(generator);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::Internal, "Hermitian eigendecomposition failed");
    }
    const Eigen::VectorXcd phases =
        (-i_unit * solver.eigenvalues().cast<Amplitude>()).array().exp();
    const Matrix dense = solver.eigenvectors() * phases.asDiagonal() *
                         solver.eigenvectors().adjoint();

    double deviation = 0.0;
    for (Eigen::Index col = 0; col < dim; ++col) {
        JointState basis(max_photons);
        basis.amplitudes()[static_cast<std::size_t>(col)] = 1.0;
        const JointState evolved = evolve_one_atom(basis, params);
        for (Eigen::Index row = 0; row < dim; ++row) {
            deviation = std::max(
                deviation,
                std::abs(evolved.amplitudes()[static_cast<std::size_t>(row)] -
                         dense(row, col)));
        }
    }
    return deviation;
}

SequenceLikelihood sequence_likelihood(const DetectionSequence &seq,
                                       const MaserParams &params) {
    return sequence_likelihood(seq, params, params.n_max() + seq.size());
}

SequenceLikelihood sequence_likelihood(const DetectionSequence &seq,
                                       const MaserParams &params,
                                       std::size_t max_photons) {
    if (max_photons < params.n_max() + seq.size()) {
        throw Error(ErrorCode::InvalidArgument,
                    "photon headroom must be at least n_max + sequence length");
    }
    SequenceLikelihood result;
    result.per_initial_n.resize(params.n_max() + 1);
    for (std::size_t n0 = 0; n0 <= params.n_max(); ++n0) {
        std::vector<Amplitude> field(max_photons + 1);
        field[n0] = 1.0;
        for (AtomOutcome outcome : seq) {
            field = evolve_one_atom(JointState::excited_atom(field), params)
                        .project(outcome);
        }
        double probability = 0.0;
        for (const auto &a : field) {
            probability += std::norm(a);
        }
        result.per_initial_n[n0] = probability;
    }
    return result;
}

FockWeights bayes_posterior(const DetectionSequence &seq, const PriorSpec &prior,
                            const MaserParams &params) {
    const FockWeights prior_weights = prior.weights(params);
    const auto likelihood = sequence_likelihood(seq, params);
    std::vector<double> joint(prior_weights.size());
    for (std::size_t n = 0; n < joint.size(); ++n) {
        joint[n] = prior_weights[n] * likelihood.per_initial_n[n];
    }
    FockWeights unnormalized(std::move(joint));
    if (unnormalized.empty_support()) {
        std::ostringstream msg;
        msg << "detection sequence '" << seq.str()
            << "' has zero probability under prior " << prior.describe();
        throw Error(ErrorCode::EmptySupport, msg.str());
    }
    return unnormalized.normalized();
}

} // namespace retromaser
