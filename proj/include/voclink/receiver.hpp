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

#include <functional>
#include <span>
#include <vector>

#include "voclink/frequency.hpp"
#include "voclink/parallel.hpp"
#include "voclink/transmitter.hpp"

namespace voclink {

inline constexpr double kSecondsPerDay = 86400.0;

/// Receiving leaf. Conductance and growth are given per day as tabulated and
/// converted to SI in loss_rate / uptake_coefficient.
struct LeafParams {
    double area = 5.0;           ///< A_l, m^2
    double conductance = 86.4;   ///< G_l, m/day
    double volume = 0.002;       ///< V_l, m^3
    double k_la = 10.0;          ///< leaf-air partition coefficient
    double growth_rate = 0.035;  ///< P_growth, 1/day

    void validate() const;
};

/// How K_LA enters the loss term. `multiply` is the default form
/// l = K_LA A_l G_l / V_l + P_growth; `divide` uses A_l G_l / (K_LA V_l).
enum class PartitionMode { multiply, divide };

/// A_l G_l / V_l in 1/s; the uptake term is b = coefficient * c(r, t).
double uptake_coefficient(const LeafParams &leaf);

/// Loss rate l in 1/s.
double loss_rate(const LeafParams &leaf, PartitionMode mode = PartitionMode::multiply);

/// H_r(f) = g / (j 2 pi f + l), normalized gain l / sqrt(4 pi^2 f^2 + l^2),
/// delay 2 pi / (l (1 + (2 pi f / l)^2)).
FrequencyResponse uptake_response(const LeafParams &leaf, const FrequencyGrid &grid,
                                  PartitionMode mode = PartitionMode::multiply, Exec exec = Exec::parallel);

struct UptakeSample {
    double t = 0.0;
    double c_air = 0.0;
    double c_leaf = 0.0;
};

/// RK4 integration of dC_R/dt = -l C_R + g c(t). Throws UnstableStep when dt > 0.1 / l.
void simulate_uptake(const LeafParams &leaf, const std::function<double(double)> &air, TimeWindow window,
                     double dt, const std::function<void(const UptakeSample &)> &observer, double c_leaf0 = 0.0,
                     PartitionMode mode = PartitionMode::multiply);

std::vector<UptakeSample> simulate_uptake(const LeafParams &leaf, const std::function<double(double)> &air,
                                          TimeWindow window, double dt, std::size_t stride = 1,
                                          double c_leaf0 = 0.0, PartitionMode mode = PartitionMode::multiply);

/// Uniformly sampled air concentration starting at t = 0, linearly
/// interpolated between samples and held beyond the last one.
std::vector<UptakeSample> simulate_uptake(const LeafParams &leaf, std::span<const double> air_series,
                                          double series_dt, double dt, std::size_t stride = 1,
                                          double c_leaf0 = 0.0, PartitionMode mode = PartitionMode::multiply);

} // namespace voclink
