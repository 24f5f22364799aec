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

#include "retromaser/figures.hpp"

#include <array>

namespace retromaser {

namespace {

constexpr std::array<FigureSpec, 8> kFigures{{
    {"1a", "e", std::nullopt, "one atom detected excited"},
    {"1b", "eeeee", std::nullopt, "five atoms detected excited"},
    {"2a", "g", std::nullopt, "one atom detected in the ground state"},
    {"2b", "ggg", std::nullopt, "three atoms detected in the ground state"},
    {"2c", "gggggg", std::nullopt, "six atoms detected in the ground state"},
    {"3", "gg", 3, "two ground detections, at most three photons initially"},
    {"4a", "gegege", std::nullopt, "six atoms alternating, ground first"},
    {"4b", "egegeg", std::nullopt, "six atoms alternating, excited first"},
}};

} // namespace

std::span<const FigureSpec> figure_table() noexcept { return kFigures; }

const FigureSpec *find_figure(std::string_view id) noexcept {
    for (const auto &figure : kFigures) {
        if (figure.id == id) {
            return &figure;
        }
    }
    return nullptr;
}

} // namespace retromaser
