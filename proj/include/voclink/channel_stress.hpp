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

#include <string>
#include <vector>

#include "voclink/core_data.hpp"
#include "voclink/frequency.hpp"
#include "voclink/parallel.hpp"

namespace voclink {

/// Gaussian puff from an instantaneous release of q0 molecules at (0, 0, z0),
/// observed at (x, y, z) downwind with spreads evaluated at x.
struct PuffChannelParams {
    double q0 = 0.0;      // molecules
    double x = 0.0;       // m
    double y = 0.0;       // m
    double z = 0.0;       // m
    double z0 = 0.0;      // m
    double u = 0.0;       // m/s
    double sigma_y = 0.0; // m
    double sigma_z = 0.0; // m
    double k_eff = 0.0;   // 1/s

    static PuffChannelParams make(double q0, const Position &receiver, double z0, double u,
                                  StabilityClass cls, double k_eff);

    double sigma_product() const noexcept { return sigma_y * sigma_z; }

    void validate() const;
};

/// exp(-y^2 / 2 sigma_y^2) * [exp(-(z-z0)^2 / 2 sigma_z^2) + exp(-(z+z0)^2 / 2 sigma_z^2)]
double crosswind_factor(const PuffChannelParams &p) noexcept;

/// Degraded puff concentration c_d(r, t) in molecules/m^3, with the
/// longitudinal spread taken as sqrt(sigma_y sigma_z) and loss exp(-k_eff t).
double puff_concentration(const PuffChannelParams &p, double t);

/// Closed-form channel response
///   H_sc(f) = q0/(2 pi u sy sz) * crosswind * exp((k - j2pi f) x/u) * exp((k - j2pi f)^2 sy sz/u^2).
/// The log-gain is evaluated directly since the exponent overflows for fast
/// reacting species at long range. Requires f = 0 on the grid.
FrequencyResponse puff_gain(const PuffChannelParams &p, const FrequencyGrid &grid, Exec exec = Exec::parallel);

/// Same series without the 0 Hz requirement; the delay is constant in f.
FrequencyResponse puff_phase_delay(const PuffChannelParams &p, const FrequencyGrid &grid,
                                   Exec exec = Exec::parallel);

/// tau_sc = 2 pi x/u + 4 pi k_eff sy sz/u^2.
double puff_delay(const PuffChannelParams &p) noexcept;

struct SpeciesChannel {
    std::string species;
    PuffChannelParams params;
};

/// One puff per blend component carrying q0 * fraction molecules with its own k_eff.
std::vector<SpeciesChannel> species_puff_channels(const Blend &blend, const Environment &env,
                                                  const Position &receiver);

/// A single puff of the whole blend degraded at the fraction-weighted k_eff.
PuffChannelParams blend_puff_channel(const Blend &blend, const Environment &env, const Position &receiver);

} // namespace voclink
