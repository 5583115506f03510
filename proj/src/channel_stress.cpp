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

#include "voclink/channel_stress.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "voclink/atmosphere.hpp"
#include "voclink/errors.hpp"

namespace voclink {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

PuffChannelParams PuffChannelParams::make(double q0, const Position &receiver, double z0, double u,
                                          StabilityClass cls, double k_eff)
{
    const DispersionCoefficients d = dispersion(receiver.x, cls);
    PuffChannelParams p{q0, receiver.x, receiver.y, receiver.z, z0, u, d.sigma_y, d.sigma_z, k_eff};
    p.validate();
    return p;
}

void PuffChannelParams::validate() const
{
    if (!(x > 0.0))
        fail(ErrorKind::NonPositiveDistance, "receiver x must be > 0");
    require(q0 > 0.0, "q0", "> 0");
    require(u > 0.0, "wind_speed", "> 0");
    require(sigma_y > 0.0 && sigma_z > 0.0, "sigma", "> 0");
    require(z >= 0.0 && z0 >= 0.0, "height", ">= 0");
    require(k_eff >= 0.0, "k_eff", ">= 0");
}

double crosswind_factor(const PuffChannelParams &p) noexcept
{
    const double sz2 = 2.0 * p.sigma_z * p.sigma_z;
    const double below = (p.z - p.z0) * (p.z - p.z0);
    const double image = (p.z + p.z0) * (p.z + p.z0);
    return std::exp(-p.y * p.y / (2.0 * p.sigma_y * p.sigma_y)) *
           (std::exp(-below / sz2) + std::exp(-image / sz2));
}

double puff_concentration(const PuffChannelParams &p, double t)
{
    require(t >= 0.0, "t", ">= 0");
    const double ss = p.sigma_product();
    const double along = p.x - p.u * t;
    return p.q0 / std::pow(kTwoPi * ss, 1.5) * std::exp(-0.5 * along * along / ss) * crosswind_factor(p) *
           std::exp(-p.k_eff * t);
}

double puff_delay(const PuffChannelParams &p) noexcept
{
    return kTwoPi * p.x / p.u + 2.0 * kTwoPi * p.k_eff * p.sigma_product() / (p.u * p.u);
}

namespace {

FrequencyResponse fill_puff(const PuffChannelParams &p, const FrequencyGrid &grid, Exec exec)
{
    p.validate();
    auto r = FrequencyResponse::sized(grid);
    const double ss_u2 = p.sigma_product() / (p.u * p.u);
    const double ln_scale = std::log(p.q0 / (kTwoPi * p.u * p.sigma_product()) * crosswind_factor(p)) +
                            p.k_eff * p.x / p.u + p.k_eff * p.k_eff * ss_u2;
    const double delay = puff_delay(p);
    for_each_index(grid.size(), exec, [&](std::size_t i) {
        const double w = kTwoPi * grid[i];
        const double ln_gain = ln_scale - w * w * ss_u2;
        r.log10_gain[i] = ln_gain / std::numbers::ln10;
        r.gain[i] = std::exp(ln_gain);
        r.phase[i] = -w * p.x / p.u - 2.0 * w * p.k_eff * ss_u2;
        r.values[i] = std::polar(r.gain[i], r.phase[i]);
        r.delay[i] = delay;
    });
    // The gain is Gaussian in f, so it peaks at the lowest grid frequency.
    const double w0 = kTwoPi * grid[0];
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double w = kTwoPi * grid[i];
        r.normalized_gain[i] = std::exp(-(w * w - w0 * w0) * ss_u2);
    }
    return r;
}

} // namespace

FrequencyResponse puff_gain(const PuffChannelParams &p, const FrequencyGrid &grid, Exec exec)
{
    require_dc(grid, "puff_gain");
    return fill_puff(p, grid, exec);
}

FrequencyResponse puff_phase_delay(const PuffChannelParams &p, const FrequencyGrid &grid, Exec exec)
{
    return fill_puff(p, grid, exec);
}

std::vector<SpeciesChannel> species_puff_channels(const Blend &blend, const Environment &env,
                                                  const Position &receiver)
{
    std::vector<SpeciesChannel> out;
    out.reserve(blend.size());
    for (const auto &c : blend.components()) {
        if (c.fraction <= 0.0)
            continue;
        out.push_back({c.species.name,
                       PuffChannelParams::make(blend.q0() * c.fraction, receiver, env.release_height,
                                               env.wind_speed, env.stability, k_eff(c.species, env))});
    }
    return out;
}

PuffChannelParams blend_puff_channel(const Blend &blend, const Environment &env, const Position &receiver)
{
    return PuffChannelParams::make(blend.q0(), receiver, env.release_height, env.wind_speed, env.stability,
                                   blend_k_eff(blend, env));
}

} // namespace voclink
