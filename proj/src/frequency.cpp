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

#include "voclink/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "voclink/errors.hpp"

namespace voclink {

FrequencyGrid::FrequencyGrid(std::vector<double> points) : points_(std::move(points))
{
    require(!points_.empty(), "frequency grid", "at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        require(std::isfinite(points_[i]) && points_[i] >= 0.0, "frequency grid", "f >= 0");
        if (i > 0)
            require(points_[i] > points_[i - 1], "frequency grid", "strictly increasing");
    }
}

FrequencyGrid FrequencyGrid::linear(double lo, double hi, std::size_t n)
{
    require(n >= 1, "frequency grid", "n >= 1");
    require(n == 1 || hi > lo, "frequency grid", "hi > lo");
    std::vector<double> pts(n);
    for (std::size_t i = 0; i < n; ++i)
        pts[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return FrequencyGrid(std::move(pts));
}

FrequencyGrid FrequencyGrid::logarithmic(double lo, double hi, std::size_t n, bool with_zero)
{
    require(lo > 0.0, "frequency grid", "log lower bound > 0");
    require(n >= 2 && hi > lo, "frequency grid", "n >= 2 and hi > lo");
    std::vector<double> pts;
    pts.reserve(n + 1);
    if (with_zero)
        pts.push_back(0.0);
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back(std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1)));
    return FrequencyGrid(std::move(pts));
}

FrequencyResponse FrequencyResponse::sized(FrequencyGrid grid)
{
    FrequencyResponse r;
    const auto n = grid.size();
    r.grid = std::move(grid);
    r.values.resize(n);
    r.gain.resize(n);
    r.log10_gain.resize(n);
    r.normalized_gain.resize(n);
    r.phase.resize(n);
    r.delay.resize(n);
    return r;
}

void require_dc(const FrequencyGrid &grid, const char *what)
{
    if (!grid.has_zero())
        fail(ErrorKind::ValidationError,
             std::string(what) + ": frequency grid must include f = 0 for normalization");
}

std::vector<double> normalize_log10(std::span<const double> log10_gain)
{
    std::vector<double> out(log10_gain.size());
    if (log10_gain.empty())
        return out;
    const double peak = *std::max_element(log10_gain.begin(), log10_gain.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::isfinite(peak) ? std::pow(10.0, log10_gain[i] - peak) : 0.0;
    return out;
}

double attenuation_db(double normalized_gain) noexcept { return 20.0 * std::log10(normalized_gain); }

} // namespace voclink
