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

#include "voclink/receiver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "voclink/errors.hpp"

namespace voclink {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void LeafParams::validate() const
{
    require(area > 0.0, "leaf.area", "> 0");
    require(conductance > 0.0, "leaf.conductance", "> 0");
    require(volume > 0.0, "leaf.volume", "> 0");
    require(k_la > 0.0, "leaf.k_la", "> 0");
    require(growth_rate > 0.0, "leaf.growth_rate", "> 0");
}

double uptake_coefficient(const LeafParams &leaf)
{
    return leaf.area * (leaf.conductance / kSecondsPerDay) / leaf.volume;
}

double loss_rate(const LeafParams &leaf, PartitionMode mode)
{
    const double exchange = uptake_coefficient(leaf);
    const double partition = mode == PartitionMode::multiply ? leaf.k_la * exchange : exchange / leaf.k_la;
    return partition + leaf.growth_rate / kSecondsPerDay;
}

FrequencyResponse uptake_response(const LeafParams &leaf, const FrequencyGrid &grid, PartitionMode mode, Exec exec)
{
    const double l = loss_rate(leaf, mode);
    require(l > 0.0, "loss rate", "> 0");
    const double g = uptake_coefficient(leaf);
    auto r = FrequencyResponse::sized(grid);
    for_each_index(grid.size(), exec, [&](std::size_t i) {
        const double w = kTwoPi * grid[i];
        r.values[i] = g / std::complex<double>(l, w);
        r.gain[i] = std::abs(r.values[i]);
        r.log10_gain[i] = std::log10(r.gain[i]);
        r.normalized_gain[i] = l / std::sqrt(w * w + l * l);
        r.phase[i] = -std::atan(w / l);
        const double ratio = w / l;
        r.delay[i] = kTwoPi / (l * (1.0 + ratio * ratio));
    });
    return r;
}

void simulate_uptake(const LeafParams &leaf, const std::function<double(double)> &air, TimeWindow window,
                     double dt, const std::function<void(const UptakeSample &)> &observer, double c_leaf0,
                     PartitionMode mode)
{
    leaf.validate();
    require(dt > 0.0, "dt", "> 0");
    require(window.end > window.start, "window", "end > start");
    const double l = loss_rate(leaf, mode);
    const double g = uptake_coefficient(leaf);
    if (dt > 0.1 / l * (1.0 + 1e-12))
        fail(ErrorKind::UnstableStep,
             "dt = " + std::to_string(dt) + " exceeds 0.1/l = " + std::to_string(0.1 / l));

    auto deriv = [&](double t, double c) { return -l * c + g * air(t); };
    double c = c_leaf0;
    const auto steps = static_cast<std::size_t>(std::ceil((window.end - window.start) / dt - 1e-9));
    observer({window.start, air(window.start), c});
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = window.start + static_cast<double>(i) * dt;
        const double t_next = i + 1 == steps ? window.end : window.start + static_cast<double>(i + 1) * dt;
        const double h = t_next - t;
        const double k1 = deriv(t, c);
        const double k2 = deriv(t + 0.5 * h, c + 0.5 * h * k1);
        const double k3 = deriv(t + 0.5 * h, c + 0.5 * h * k2);
        const double k4 = deriv(t + h, c + h * k3);
        c += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        observer({t_next, air(t_next), c});
    }
}

std::vector<UptakeSample> simulate_uptake(const LeafParams &leaf, const std::function<double(double)> &air,
                                          TimeWindow window, double dt, std::size_t stride, double c_leaf0,
                                          PartitionMode mode)
{
    require(stride >= 1, "stride", ">= 1");
    std::vector<UptakeSample> out;
    std::size_t index = 0;
    UptakeSample last{};
    simulate_uptake(leaf, air, window, dt,
                    [&](const UptakeSample &s) {
                        if (index++ % stride == 0)
                            out.push_back(s);
                        last = s;
                    },
                    c_leaf0, mode);
    if (out.empty() || out.back().t != last.t)
        out.push_back(last);
    return out;
}

std::vector<UptakeSample> simulate_uptake(const LeafParams &leaf, std::span<const double> air_series,
                                          double series_dt, double dt, std::size_t stride, double c_leaf0,
                                          PartitionMode mode)
{
    require(air_series.size() >= 2, "air series", ">= 2 samples");
    require(series_dt > 0.0, "series dt", "> 0");
    auto air = [&](double t) {
        const double pos = t / series_dt;
        if (pos <= 0.0)
            return air_series.front();
        const auto i = static_cast<std::size_t>(pos);
        if (i + 1 >= air_series.size())
            return air_series.back();
        const double frac = pos - static_cast<double>(i);
        return air_series[i] + frac * (air_series[i + 1] - air_series[i]);
    };
    const double end = series_dt * static_cast<double>(air_series.size() - 1);
    return simulate_uptake(leaf, air, TimeWindow{0.0, end}, dt, stride, c_leaf0, mode);
}

} // namespace voclink
