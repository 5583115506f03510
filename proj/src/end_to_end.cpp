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

#include "voclink/end_to_end.hpp"

#include <cmath>
#include <numbers>

#include "voclink/errors.hpp"

namespace voclink {

FrequencyResponse end_to_end_response(const FrequencyResponse &tx, const FrequencyResponse &channel,
                                      const FrequencyResponse &rx)
{
    if (!(tx.grid == channel.grid) || !(tx.grid == rx.grid))
        fail(ErrorKind::GridMismatch, "stage responses are sampled on different frequency grids");
    auto r = FrequencyResponse::sized(tx.grid);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double g = tx.normalized_gain[i] * channel.normalized_gain[i] * rx.normalized_gain[i];
        r.normalized_gain[i] = g;
        r.gain[i] = g;
        r.log10_gain[i] = std::log10(g);
        r.phase[i] = tx.phase[i] + channel.phase[i] + rx.phase[i];
        r.values[i] = std::polar(g, r.phase[i]);
        r.delay[i] = tx.delay[i] + channel.delay[i] + rx.delay[i];
    }
    return r;
}

double bandwidth_3db(const FrequencyResponse &response)
{
    require_dc(response.grid, "bandwidth_3db");
    const double threshold = 1.0 / std::numbers::sqrt2;
    const auto &g = response.normalized_gain;
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (g[i] > threshold)
            continue;
        const double f0 = response.grid[i - 1];
        const double f1 = response.grid[i];
        if (g[i] == threshold || g[i - 1] == g[i])
            return f1;
        return f0 + (threshold - g[i - 1]) * (f1 - f0) / (g[i] - g[i - 1]);
    }
    fail(ErrorKind::NeverCrosses, "normalized gain stays above -3 dB on the grid");
}

double capacity(double bandwidth, double snr_linear)
{
    require(bandwidth >= 0.0, "bandwidth", ">= 0");
    require(snr_linear >= 0.0, "snr", ">= 0");
    return bandwidth * std::log1p(snr_linear) / std::numbers::ln2;
}

} // namespace voclink
