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

#include <complex>
#include <functional>
#include <vector>

#include "voclink/core_data.hpp"
#include "voclink/frequency.hpp"
#include "voclink/parallel.hpp"

namespace voclink {

/// Leaf pool contents in molecules.
struct PoolState {
    double s_a = 0.0; ///< aqueous pool
    double s_l = 0.0; ///< lipid pool
    double s_g = 0.0; ///< intercellular gas phase pool
};

struct PoolSample {
    double t = 0.0;
    PoolState pools;
    double emission_rate = 0.0; ///< e(t) = k_g * S_g, molecules/s
};

struct TimeWindow {
    double start = 0.0;
    double end = 0.0;
};

/// VOC production P(t): a non-negative combination of impulse, step,
/// Gaussian pulse and sinusoid terms.
class ProductionSignal {
public:
    enum class Kind { impulse, step, gaussian_pulse, sinusoid };

    /// `area` molecules injected into the pools at the window start.
    static ProductionSignal impulse(double area);
    /// Constant `rate` molecules/s from the window start.
    static ProductionSignal step(double rate);
    /// Gaussian pulse carrying `area` molecules, centred at `center` s.
    static ProductionSignal gaussian_pulse(double area, double center, double width);
    /// mean + amplitude * sin(2 pi f t); requires amplitude <= mean.
    static ProductionSignal sinusoid(double mean, double amplitude, double frequency);

    /// Instantaneous production rate (impulse terms excluded).
    double rate(double t) const noexcept;
    /// Molecules injected at the window start.
    double impulse_area() const noexcept;

    ProductionSignal operator+(const ProductionSignal &other) const;
    ProductionSignal scaled(double factor) const;

private:
    struct Term {
        Kind kind;
        double a, b, c; // kind-specific parameters
        double weight;
    };
    std::vector<Term> terms_;
};

/// Pool contents at steady state under constant production `rate`.
PoolState steady_state_pools(const Kinetics &kin, double rate) noexcept;

/// Classic RK4 over `window` with fixed step `dt` (the last step is clipped to
/// the window end). Every integration step is passed to `observer`.
///
/// Throws MissingKinetics, or UnstableStep when dt > 0.1 / max(k_a, k_l, k_g).
void simulate_pools(const VocSpecies &species, const ProductionSignal &production, TimeWindow window,
                    double dt, const std::function<void(const PoolSample &)> &observer,
                    PoolState initial = {});

/// As above, keeping every `stride`-th step plus the final one.
std::vector<PoolSample> simulate_pools(const VocSpecies &species, const ProductionSignal &production,
                                       TimeWindow window, double dt, std::size_t stride = 1,
                                       PoolState initial = {});

// Point evaluations of the transmitter transfer function
//   H_Tx(f) = k_g/(j2pi f + k_g) * (k_a eta/(j2pi f + k_a) + k_l (1-eta)/(j2pi f + k_l)).
std::complex<double> tx_transfer(const Kinetics &kin, double f) noexcept;
/// |H_Tx| through the real/imaginary split of the pool bracket.
double tx_gain(const Kinetics &kin, double f) noexcept;
/// Sum of per-factor arctangents; each factor lies in (-pi/2, 0], so no unwrapping.
double tx_phase(const Kinetics &kin, double f) noexcept;
/// Group delay -dphi/df in closed form (s).
double tx_delay(const Kinetics &kin, double f) noexcept;

FrequencyResponse transfer_function(const VocSpecies &species, const FrequencyGrid &grid,
                                    Exec exec = Exec::parallel);

/// transfer_function with the 0 Hz precondition of normalized outputs.
FrequencyResponse tx_normalized_gain(const VocSpecies &species, const FrequencyGrid &grid,
                                     Exec exec = Exec::parallel);

FrequencyResponse tx_phase_delay(const VocSpecies &species, const FrequencyGrid &grid,
                                 Exec exec = Exec::parallel);

/// Fraction-weighted complex sum of per-species responses. Phase is the
/// argument of the sum and delay is -Im(H'/H) with H' analytic.
FrequencyResponse blend_tx_response(const Blend &blend, const FrequencyGrid &grid,
                                    Exec exec = Exec::parallel);

} // namespace voclink
