// SPDX-License-Identifier: Apache-2.0
//
// voclink - VOC-based interplant molecular communication link model
// Copyright (C) 2026 The voclink authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "voclink/core_data.hpp"
#include "voclink/noise_snr.hpp"
#include "voclink/receiver.hpp"

namespace voclink {

struct NoiseSourceSpec {
    double x0 = 0.0; // m
    double y0 = 0.0; // m
    std::string blend;
    std::optional<double> q_n; ///< overrides the blend q0
    std::optional<double> k_n; ///< overrides the blend k_eff, 1/s
};

struct LinkGeometry {
    std::string signal_blend;
    Position receiver{100.0, 0.0, 0.0};
    std::vector<NoiseSourceSpec> noise_sources;
};

struct SimulationSettings {
    LeafParams leaf;
    PartitionMode partition = PartitionMode::multiply;
    double delta_t = 86400.0; // s, constitutive observation window
    std::optional<double> delta_f; ///< Hz, replaces the uncertainty bound when set
};

/// Fully resolved, validated input to every CLI command.
struct Scenario {
    std::vector<VocSpecies> species;
    std::vector<Blend> blends;
    Environment environment;
    LinkGeometry geometry;
    SimulationSettings simulation;

    const Blend &blend(std::string_view name) const;
    const Blend &signal_blend() const { return blend(geometry.signal_blend); }
    /// The signal emitter at the origin.
    PointSource signal_source() const;
    /// Noise emitters with their q and k overrides applied.
    std::vector<PointSource> noise_sources() const;
    void validate() const;
};

/// Q. ilex signal, five Pinus pinea noise sources, reference environment and leaf.
Scenario builtin_scenario();

/// Parses the JSON config. Unknown keys are rejected. Syntax and type errors
/// raise ParseError with line/column or the field path; range violations
/// raise ValidationError naming the field.
Scenario parse_scenario(std::string_view text);

/// Loads a config file. Relative paths that do not exist are retried under
/// $VOCLINK_FIXTURE_DIR.
Scenario load_scenario(const std::filesystem::path &path);

/// Canonical config text; parse_scenario(to_json(s)) reproduces s exactly.
std::string to_json(const Scenario &scenario);

std::filesystem::path resolve_fixture(const std::filesystem::path &path);

} // namespace voclink
