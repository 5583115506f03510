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

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "voclink/frequency.hpp"
#include "voclink/parallel.hpp"
#include "voclink/scenario.hpp"

namespace voclink {

/// Sweep overrides; unset fields fall back to per-command defaults.
struct CommandOptions {
    std::optional<std::vector<double>> x; // m
    std::optional<std::vector<double>> u; // m/s
    std::optional<FrequencyGrid> f;       // Hz
    std::optional<std::string> species;   ///< restrict to one compound of the signal blend
    double t_end = 600.0;                 ///< tx-sim horizon, s
    Exec exec = Exec::parallel;
};

struct CommandInfo {
    std::string_view name;
    std::string_view columns;
    std::string_view summary;
};

std::span<const CommandInfo> commands();

/// Writes the CSV for `name` to `out`. Rows are ordered by sweep index.
void run_command(std::string_view name, const Scenario &scenario, const CommandOptions &options,
                 std::ostream &out);

} // namespace voclink
