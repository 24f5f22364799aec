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
#include <functional>
#include <optional>
#include <string_view>

#include "retromaser/types.hpp"

namespace retromaser {

/**
 * The per-atom factors used to build POM elements. Defaults to the physical
 * c_factor / s_factor; the verification suite swaps in mutated kernels to
 * prove that its checks detect a broken model.
 */
struct RabiKernel {
    using Factor = double (*)(std::size_t n, unsigned m, const MaserParams &);
    Factor excited = &c_factor;
    Factor ground = &s_factor;
};

/// A cavity-field POM element. Every such element is diagonal in the Fock
/// basis, so it is stored as its coefficients C_n for n = 0..n_max.
class PomElement {
  public:
    PomElement(FockWeights coefficients, DetectionSequence sequence,
               MaserParams params)
        : coefficients_(std::move(coefficients)),
          sequence_(std::move(sequence)), params_(params) {}

    const FockWeights &coefficients() const noexcept { return coefficients_; }
    const DetectionSequence &sequence() const noexcept { return sequence_; }
    const MaserParams &params() const noexcept { return params_; }
    double operator[](std::size_t n) const { return coefficients_[n]; }

  private:
    FockWeights coefficients_;
    DetectionSequence sequence_;
    MaserParams params_;
};

/**
 * Builds the field POM element for a detection sequence.
 *
 * Walks the atoms in chronological order with a shift counter k starting at
 * 1. An excited detection multiplies C_n by cos^2(theta sqrt(n+k)); a ground
 * detection multiplies by sin^2(theta sqrt(n+k)) and then increments k,
 * because every later atom meets one more photon. Coefficients are exact for
 * every n in 0..n_max; the photon-number cutoff introduces no error.
 *
 * A factor pushing a coefficient outside [0, 1] by more than 1e-12 is an
 * Error(Internal); smaller excursions are rounding and get clamped.
 */
PomElement build_pom(const DetectionSequence &seq, const MaserParams &params,
                     const RabiKernel &kernel = {});

/// Largest number of atoms completeness_check will enumerate (2^16 elements).
inline constexpr std::size_t kMaxCompletenessLength = 16;

/// Sums the coefficients of all 2^s POM elements of length s and returns
/// max_n |sum_n - 1|. s > kMaxCompletenessLength is Error(BoundExceeded).
/// Sequences are summed in a fixed order, so the result is reproducible.
double completeness_check(std::size_t s, const MaserParams &params,
                          const RabiKernel &kernel = {});

enum class Table1Row { ExcitedExcited, GroundGround, ExcitedGround, GroundExcited };

std::optional<Table1Row> parse_table1_row(std::string_view text);
std::string_view table1_row_name(Table1Row row) noexcept;
DetectionSequence table1_sequence(Table1Row row);

/// Closed-form two-atom coefficient as a function of the initial photon
/// number, written out directly from the trigonometric products (identity
/// final weights). Independent of build_pom; used to cross-check it.
std::function<double(std::size_t)> symbolic_table1(Table1Row row, double theta);

/// max over n in 0..n_max of |build_pom(row) - symbolic_table1(row)|.
double table1_deviation(Table1Row row, const MaserParams &params,
                        const RabiKernel &kernel = {});

} // namespace retromaser
