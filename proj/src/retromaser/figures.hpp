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
#include <optional>
#include <span>
#include <string_view>

#include "retromaser/retrodiction.hpp"

namespace retromaser {

/// Preset detection scenario behind one reference photon-number plot.
/// All figures use theta = pi.
struct FigureSpec {
    std::string_view id;
    std::string_view sequence;
    /// Cap on the initial photon number; nullopt means a uniform prior.
    std::optional<std::size_t> prior_cap;
    std::string_view caption;

    PriorSpec prior() const {
        return prior_cap ? PriorSpec::cap(*prior_cap) : PriorSpec::uniform();
    }
};

std::span<const FigureSpec> figure_table() noexcept;

/// nullptr for an unknown id.
const FigureSpec *find_figure(std::string_view id) noexcept;

} // namespace retromaser
