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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace voclink {

/// Strictly increasing, non-negative frequencies in Hz.
class FrequencyGrid {
public:
    FrequencyGrid() = default;
    explicit FrequencyGrid(std::vector<double> points);

    /// `n` evenly spaced points on [lo, hi].
    static FrequencyGrid linear(double lo, double hi, std::size_t n);
    /// `n` log-spaced points on [lo, hi] (lo > 0), optionally preceded by 0 Hz.
    static FrequencyGrid logarithmic(double lo, double hi, std::size_t n, bool with_zero);

    std::span<const double> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    double operator[](std::size_t i) const { return points_[i]; }
    bool has_zero() const noexcept { return !points_.empty() && points_.front() == 0.0; }

    bool operator==(const FrequencyGrid &) const = default;

private:
    std::vector<double> points_;
};

/// Sampled frequency response of one stage (or a product of stages).
///
/// `gain` is |values|; `log10_gain` is carried separately because several
/// closed-form gains overflow double range long before their normalized
/// shape does. `normalized_gain` is gain divided by its maximum over the grid.
struct FrequencyResponse {
    FrequencyGrid grid;
    std::vector<std::complex<double>> values;
    std::vector<double> gain;
    std::vector<double> log10_gain;
    std::vector<double> normalized_gain;
    std::vector<double> phase; // rad
    std::vector<double> delay; // s

    std::size_t size() const noexcept { return grid.size(); }

    /// Allocates every series to the grid size.
    static FrequencyResponse sized(FrequencyGrid grid);
};

/// Throws ValidationError unless the grid includes 0 Hz. Normalized outputs
/// divide by the maximum gain, which every stage attains at DC.
void require_dc(const FrequencyGrid &grid, const char *what);

/// normalized_i = 10^(log10_gain_i - max log10_gain).
std::vector<double> normalize_log10(std::span<const double> log10_gain);

/// 20 log10 of a normalized gain.
double attenuation_db(double normalized_gain) noexcept;

} // namespace voclink
