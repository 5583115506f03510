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

// Steady-state sinusoid experiments shared by the unit and acceptance suites.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "voclink/oracle.hpp"
#include "voclink/receiver.hpp"
#include "voclink/transmitter.hpp"

namespace voclink::testing {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Drives the pools with 1 + 0.5 sin(2 pi f t) from their DC steady state and
/// returns the fitted emission amplitude over the input amplitude.
inline double tx_sine_ratio(const VocSpecies &species, double f, int periods = 4)
{
    const auto &k = species.require_kinetics();
    const double w = kTwoPi * f;
    const double k_min = std::min({k.k_a, k.k_l, k.k_g});
    const double k_max = std::max({k.k_a, k.k_l, k.k_g});
    const double settle = 12.0 / std::max(k_min, w / 20.0);
    const double span = periods / f;
    const double dt = std::min(0.1 / k_max, 1.0 / (400.0 * f));
    oracle::SineFit fit(f, settle, span);
    simulate_pools(
        species, ProductionSignal::sinusoid(1.0, 0.5, f), {0.0, settle + span}, dt,
        [&](const PoolSample &s) {
            if (s.t >= settle)
                fit.add(s.t, s.emission_rate);
        },
        steady_state_pools(k, 1.0));
    return fit.amplitude() / 0.5;
}

/// Same experiment on the leaf: air concentration 1 + 0.5 sin(2 pi f t).
inline double rx_sine_ratio(const LeafParams &leaf, double f, int periods = 4,
                            PartitionMode mode = PartitionMode::multiply)
{
    const double l = loss_rate(leaf, mode);
    const double g = uptake_coefficient(leaf);
    const double settle = 24.0 / l;
    const double span = periods / f;
    const double dt = std::min(0.1 / l, 1.0 / (400.0 * f));
    oracle::SineFit fit(f, settle, span);
    simulate_uptake(
        leaf, [f](double t) { return 1.0 + 0.5 * std::sin(kTwoPi * f * t); }, {0.0, settle + span}, dt,
        [&](const UptakeSample &s) {
            if (s.t >= settle)
                fit.add(s.t, s.c_leaf);
        },
        g / l, mode);
    return fit.amplitude() / 0.5;
}

inline bool within_rel(double value, double expected, double rel)
{
    return std::abs(value - expected) <= rel * std::abs(expected);
}

} // namespace voclink::testing
