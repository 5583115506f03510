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

#include "voclink/noise_snr.hpp"

#include <cmath>
#include <limits>

#include "voclink/atmosphere.hpp"
#include "voclink/errors.hpp"

namespace voclink {

PointSource blend_source(const Blend &blend, const Environment &env, double x0, double y0,
                         std::optional<double> q)
{
    return {x0, y0, q.value_or(blend.q0()), blend_k_eff(blend, env)};
}

std::vector<double> sample_times(const Environment &env)
{
    env.validate();
    const auto n = static_cast<std::size_t>(std::floor((env.t_end - env.t_start) / env.sample_step + 1e-9)) + 1;
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i)
        t[i] = env.t_start + static_cast<double>(i) * env.sample_step;
    return t;
}

double avg_power(double q, double x_rel, double y_rel, double k, double sigma_y, double sigma_z, double u,
                 std::span<const double> times)
{
    require(!times.empty(), "sample count", ">= 1");
    const double ss = sigma_y * sigma_z;
    const double lateral = std::exp(-y_rel * y_rel / (sigma_y * sigma_y));
    double sum = 0.0;
    for (const double t : times) {
        const double d = x_rel - u * t;
        sum += q * q * std::exp(-d * d / ss) * lateral * std::exp(-2.0 * k * t);
    }
    return sum / static_cast<double>(times.size());
}

double received_power(const PointSource &source, const Position &receiver, const Environment &env,
                      std::span<const double> times)
{
    const double x_rel = receiver.x - source.x0;
    if (x_rel <= 0.0 || source.q == 0.0)
        return 0.0;
    const DispersionCoefficients d = dispersion(x_rel, env.stability);
    return avg_power(source.q, x_rel, receiver.y - source.y0, source.k, d.sigma_y, d.sigma_z, env.wind_speed,
                     times);
}

namespace {

double ratio(double signal, double noise) noexcept
{
    return noise > 0.0 ? signal / noise : std::numeric_limits<double>::infinity();
}

double total_power(std::span<const PointSource> sources, const Position &receiver, const Environment &env,
                   std::span<const double> times)
{
    double p = 0.0;
    for (const auto &s : sources)
        p += received_power(s, receiver, env, times);
    return p;
}

} // namespace

double snr(const PointSource &signal, const PointSource &noise, const Environment &env, const Position &receiver)
{
    const auto times = sample_times(env);
    return ratio(received_power(signal, receiver, env, times), received_power(noise, receiver, env, times));
}

double snr_multi(std::span<const PointSource> signals, std::span<const PointSource> noises,
                 const Environment &env, const Position &receiver)
{
    require(!signals.empty(), "signals", "non-empty");
    const auto times = sample_times(env);
    return ratio(total_power(signals, receiver, env, times), total_power(noises, receiver, env, times));
}

std::vector<double> snr_cumulative(std::span<const PointSource> signals, std::span<const PointSource> noises,
                                   const Environment &env, const Position &receiver)
{
    require(!signals.empty(), "signals", "non-empty");
    const auto times = sample_times(env);
    const double signal = total_power(signals, receiver, env, times);
    std::vector<double> out;
    out.reserve(noises.size());
    double noise = 0.0;
    for (const auto &n : noises) {
        noise += received_power(n, receiver, env, times);
        out.push_back(ratio(signal, noise));
    }
    return out;
}

std::vector<std::vector<double>> snr_sweep(std::span<const double> xs, std::span<const PointSource> signals,
                                           std::span<const PointSource> noises, const Environment &env,
                                           const Position &receiver, Exec exec)
{
    require(!signals.empty(), "signals", "non-empty");
    std::vector<std::vector<double>> out(xs.size());
    for_each_index(xs.size(), exec, [&](std::size_t i) {
        Position r = receiver;
        r.x = xs[i];
        out[i] = snr_cumulative(signals, noises, env, r);
    });
    return out;
}

double to_db(double ratio) noexcept { return 10.0 * std::log10(ratio); }

} // namespace voclink
