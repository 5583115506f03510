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

#include "voclink/channel_constitutive.hpp"

#include <cmath>
#include <numbers>

#include "voclink/errors.hpp"

namespace voclink {

double uncertainty_df(double delta_t)
{
    require(delta_t > 0.0, "delta_t", "> 0");
    return 1.0 / (4.0 * std::numbers::pi * delta_t);
}

double PlumeChannelParams::delta_f() const
{
    return delta_f_override ? *delta_f_override : uncertainty_df(delta_t);
}

void PlumeChannelParams::validate() const
{
    geometry.validate();
    require(delta_t > 0.0, "delta_t", "> 0");
    if (delta_f_override)
        require(*delta_f_override > 0.0, "delta_f", "> 0");
}

double plume_concentration(const PuffChannelParams &g)
{
    g.validate();
    return g.q0 / (2.0 * std::numbers::pi * g.u * g.sigma_product()) * crosswind_factor(g) *
           std::exp(-g.k_eff * g.x / g.u);
}

double plume_concentration(const PlumeChannelParams &p) { return plume_concentration(p.geometry); }

double gaussian_delta(double f, double delta_f) noexcept
{
    return std::exp(-f * f / (2.0 * delta_f * delta_f)) / (std::sqrt(2.0 * std::numbers::pi) * delta_f);
}

FrequencyResponse plume_response(const PlumeChannelParams &p, const FrequencyGrid &grid, Exec exec)
{
    p.validate();
    require_dc(grid, "plume_response");
    const double c_p = plume_concentration(p);
    const double df = p.delta_f();
    auto r = FrequencyResponse::sized(grid);
    for_each_index(grid.size(), exec, [&](std::size_t i) {
        const double f = grid[i];
        r.gain[i] = c_p * gaussian_delta(f, df);
        r.log10_gain[i] = std::log10(r.gain[i]);
        r.values[i] = r.gain[i];
        r.normalized_gain[i] = std::exp(-f * f / (2.0 * df * df));
        r.phase[i] = 0.0;
        r.delay[i] = 0.0;
    });
    return r;
}

} // namespace voclink
