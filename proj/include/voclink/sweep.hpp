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

#include <string_view>
#include <vector>

#include "voclink/frequency.hpp"

namespace voclink {

/// Parses "a,b,c" or an inclusive "start:step:end" range. Throws ValidationError
/// on empty input, malformed numbers or a non-positive step.
std::vector<double> parse_sweep(std::string_view text);

/// Parses "lo:hi:n" into a log-spaced grid preceded by 0 Hz.
FrequencyGrid parse_log_grid(std::string_view text);

} // namespace voclink
