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

#include "voclink/channel_stress.hpp"

namespace voclink {

inline constexpr double kDailyWindow = 86400.0; // s

/// Continuous (constitutive) release observed over a window `delta_t`.
struct PlumeChannelParams {
    PuffChannelParams geometry;
    double delta_t = kDailyWindow;
    std::optional<double> delta_f_override; ///< replaces 1/(4 pi delta_t) when set

    double delta_f() const;
    void validate() const;
};

/// Steady plume q0/(2 pi u sy sz) * crosswind * exp(-k_eff x/u).
double plume_concentration(const PlumeChannelParams &p);
double plume_concentration(const PuffChannelParams &geometry);

/// Smallest spectral width admitted by delta_t * delta_f >= 1/(4 pi).
double uncertainty_df(double delta_t);

/// Gaussian stand-in for the DC delta: exp(-f^2 / 2 df^2) / (sqrt(2 pi) df).
double gaussian_delta(double f, double delta_f) noexcept;

/// H_cc(f) = c_p * G(f). Real-valued, so phase and delay are identically zero.
/// Requires f = 0 on the grid.
FrequencyResponse plume_response(const PlumeChannelParams &p, const FrequencyGrid &grid,
                                 Exec exec = Exec::parallel);

} // namespace voclink
