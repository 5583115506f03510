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
#include <span>
#include <vector>

#include "voclink/core_data.hpp"
#include "voclink/parallel.hpp"

namespace voclink {

/// An instantaneous emitter at ground offset (x0, y0) releasing q molecules
/// that decay at rate k. Signals sit at the origin; noise sources are offset.
struct PointSource {
    double x0 = 0.0; // m
    double y0 = 0.0; // m
    double q = 0.0;  // molecules
    double k = 0.0;  // 1/s
};

using NoiseSource = PointSource;

/// Source releasing blend.q0() (or `q` when given) molecules, decaying at the blend k_eff.
PointSource blend_source(const Blend &blend, const Environment &env, double x0 = 0.0, double y0 = 0.0,
                         std::optional<double> q = std::nullopt);

/// Sampling instants t_start, t_start + step, ... <= t_end.
std::vector<double> sample_times(const Environment &env);

/// (1/n) sum_t q^2 exp(-(x_rel - u t)^2 / (sy sz)) exp(-y_rel^2 / sy^2) exp(-2 k t)
double avg_power(double q, double x_rel, double y_rel, double k, double sigma_y, double sigma_z, double u,
                 std::span<const double> times);

/// Average power of `source` at `receiver`, with the spreads evaluated at the
/// receiver's downwind distance from that source. Receivers upwind of the
/// source see no power.
double received_power(const PointSource &source, const Position &receiver, const Environment &env,
                      std::span<const double> times);

/// P_signal / P_noise; +inf when the noise power vanishes.
double snr(const PointSource &signal, const PointSource &noise, const Environment &env,
           const Position &receiver);

/// Sum of signal powers over sum of noise powers.
double snr_multi(std::span<const PointSource> signals, std::span<const PointSource> noises,
                 const Environment &env, const Position &receiver);

/// Entry i is the SNR with noise sources 0..i present.
std::vector<double> snr_cumulative(std::span<const PointSource> signals, std::span<const PointSource> noises,
                                   const Environment &env, const Position &receiver);

/// snr_cumulative at each receiver distance in `xs` (receiver y, z fixed).
std::vector<std::vector<double>> snr_sweep(std::span<const double> xs, std::span<const PointSource> signals,
                                           std::span<const PointSource> noises, const Environment &env,
                                           const Position &receiver, Exec exec = Exec::parallel);

double to_db(double ratio) noexcept;

} // namespace voclink
