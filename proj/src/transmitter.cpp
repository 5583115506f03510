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

#include "voclink/transmitter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "voclink/errors.hpp"

namespace voclink {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
using cplx = std::complex<double>;

} // namespace

ProductionSignal ProductionSignal::impulse(double area)
{
    require(area >= 0.0, "impulse.area", ">= 0");
    ProductionSignal s;
    s.terms_.push_back({Kind::impulse, area, 0.0, 0.0, 1.0});
    return s;
}

ProductionSignal ProductionSignal::step(double rate)
{
    require(rate >= 0.0, "step.rate", ">= 0");
    ProductionSignal s;
    s.terms_.push_back({Kind::step, rate, 0.0, 0.0, 1.0});
    return s;
}

ProductionSignal ProductionSignal::gaussian_pulse(double area, double center, double width)
{
    require(area >= 0.0, "gaussian_pulse.area", ">= 0");
    require(width > 0.0, "gaussian_pulse.width", "> 0");
    ProductionSignal s;
    s.terms_.push_back({Kind::gaussian_pulse, area, center, width, 1.0});
    return s;
}

ProductionSignal ProductionSignal::sinusoid(double mean, double amplitude, double frequency)
{
    require(amplitude >= 0.0 && amplitude <= mean, "sinusoid.amplitude", "0 <= amplitude <= mean");
    require(frequency >= 0.0, "sinusoid.frequency", ">= 0");
    ProductionSignal s;
    s.terms_.push_back({Kind::sinusoid, mean, amplitude, frequency, 1.0});
    return s;
}

double ProductionSignal::rate(double t) const noexcept
{
    double p = 0.0;
    for (const auto &term : terms_) {
        switch (term.kind) {
        case Kind::impulse:
            break;
        case Kind::step:
            p += term.weight * term.a;
            break;
        case Kind::gaussian_pulse: {
            const double z = (t - term.b) / term.c;
            p += term.weight * term.a / (std::sqrt(kTwoPi) * term.c) * std::exp(-0.5 * z * z);
            break;
        }
        case Kind::sinusoid:
            p += term.weight * (term.a + term.b * std::sin(kTwoPi * term.c * t));
            break;
        }
    }
    return p;
}

double ProductionSignal::impulse_area() const noexcept
{
    double area = 0.0;
    for (const auto &term : terms_)
        if (term.kind == Kind::impulse)
            area += term.weight * term.a;
    return area;
}

ProductionSignal ProductionSignal::operator+(const ProductionSignal &other) const
{
    ProductionSignal s = *this;
    s.terms_.insert(s.terms_.end(), other.terms_.begin(), other.terms_.end());
    return s;
}

ProductionSignal ProductionSignal::scaled(double factor) const
{
    require(factor >= 0.0, "production scale", ">= 0");
    ProductionSignal s = *this;
    for (auto &term : s.terms_)
        term.weight *= factor;
    return s;
}

PoolState steady_state_pools(const Kinetics &kin, double rate) noexcept
{
    return {kin.eta * rate / kin.k_a, (1.0 - kin.eta) * rate / kin.k_l, rate / kin.k_g};
}

void simulate_pools(const VocSpecies &species, const ProductionSignal &production, TimeWindow window,
                    double dt, const std::function<void(const PoolSample &)> &observer, PoolState initial)
{
    const Kinetics &kin = species.require_kinetics();
    require(dt > 0.0, "dt", "> 0");
    require(window.end > window.start, "window", "end > start");
    const double k_max = std::max({kin.k_a, kin.k_l, kin.k_g});
    if (dt > 0.1 / k_max * (1.0 + 1e-12))
        fail(ErrorKind::UnstableStep, "dt = " + std::to_string(dt) + " exceeds 0.1/max(k) = " +
                                          std::to_string(0.1 / k_max));

    const double eta = kin.eta;
    auto deriv = [&](double t, const PoolState &s) {
        const double p = production.rate(t);
        return PoolState{eta * p - kin.k_a * s.s_a, (1.0 - eta) * p - kin.k_l * s.s_l,
                         kin.k_a * s.s_a + kin.k_l * s.s_l - kin.k_g * s.s_g};
    };
    auto axpy = [](const PoolState &s, double h, const PoolState &d) {
        return PoolState{s.s_a + h * d.s_a, s.s_l + h * d.s_l, s.s_g + h * d.s_g};
    };

    PoolState s = initial;
    const double area = production.impulse_area();
    s.s_a += eta * area;
    s.s_l += (1.0 - eta) * area;

    const double span = window.end - window.start;
    const auto steps = static_cast<std::size_t>(std::ceil(span / dt - 1e-9));
    observer({window.start, s, kin.k_g * s.s_g});
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = window.start + static_cast<double>(i) * dt;
        const double t_next = i + 1 == steps ? window.end : window.start + static_cast<double>(i + 1) * dt;
        const double h = t_next - t;
        const PoolState k1 = deriv(t, s);
        const PoolState k2 = deriv(t + 0.5 * h, axpy(s, 0.5 * h, k1));
        const PoolState k3 = deriv(t + 0.5 * h, axpy(s, 0.5 * h, k2));
        const PoolState k4 = deriv(t + h, axpy(s, h, k3));
        s.s_a += h / 6.0 * (k1.s_a + 2.0 * k2.s_a + 2.0 * k3.s_a + k4.s_a);
        s.s_l += h / 6.0 * (k1.s_l + 2.0 * k2.s_l + 2.0 * k3.s_l + k4.s_l);
        s.s_g += h / 6.0 * (k1.s_g + 2.0 * k2.s_g + 2.0 * k3.s_g + k4.s_g);
        observer({t_next, s, kin.k_g * s.s_g});
    }
}

std::vector<PoolSample> simulate_pools(const VocSpecies &species, const ProductionSignal &production,
                                       TimeWindow window, double dt, std::size_t stride, PoolState initial)
{
    require(stride >= 1, "stride", ">= 1");
    std::vector<PoolSample> out;
    std::size_t index = 0;
    PoolSample last{};
    simulate_pools(species, production, window, dt,
                   [&](const PoolSample &sample) {
                       if (index++ % stride == 0)
                           out.push_back(sample);
                       last = sample;
                   },
                   initial);
    if (out.empty() || out.back().t != last.t)
        out.push_back(last);
    return out;
}

std::complex<double> tx_transfer(const Kinetics &kin, double f) noexcept
{
    const cplx jw(0.0, kTwoPi * f);
    const cplx gas = kin.k_g / (jw + kin.k_g);
    const cplx pools = kin.k_a * kin.eta / (jw + kin.k_a) + kin.k_l * (1.0 - kin.eta) / (jw + kin.k_l);
    return gas * pools;
}

namespace {

// Real and (negated) imaginary parts of the pool bracket and their f-derivatives.
struct PoolSplit {
    double re, im, d_re, d_im;
};

PoolSplit pool_split(const Kinetics &kin, double f) noexcept
{
    const double w = kTwoPi * f;
    const double w2 = w * w;
    const double a2 = kin.k_a * kin.k_a;
    const double l2 = kin.k_l * kin.k_l;
    const double da = a2 + w2;
    const double dl = l2 + w2;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    PoolSplit s{};
    s.re = a2 * kin.eta / da + l2 * (1.0 - kin.eta) / dl;
    s.im = kin.k_a * kin.eta * w / da + kin.k_l * (1.0 - kin.eta) * w / dl;
    s.d_re = -8.0 * pi2 * a2 * kin.eta * f / (da * da) - 8.0 * pi2 * l2 * (1.0 - kin.eta) * f / (dl * dl);
    s.d_im = kTwoPi * kin.k_a * kin.eta * (a2 - w2) / (da * da) +
             kTwoPi * (1.0 - kin.eta) * kin.k_l * (l2 - w2) / (dl * dl);
    return s;
}

} // namespace

double tx_gain(const Kinetics &kin, double f) noexcept
{
    const double w = kTwoPi * f;
    const PoolSplit s = pool_split(kin, f);
    return kin.k_g / std::sqrt(kin.k_g * kin.k_g + w * w) * std::sqrt(s.im * s.im + s.re * s.re);
}

double tx_phase(const Kinetics &kin, double f) noexcept
{
    const PoolSplit s = pool_split(kin, f);
    return std::atan(-kTwoPi * f / kin.k_g) + std::atan(-s.im / s.re);
}

double tx_delay(const Kinetics &kin, double f) noexcept
{
    const double w = kTwoPi * f;
    const PoolSplit s = pool_split(kin, f);
    return kTwoPi * kin.k_g / (kin.k_g * kin.k_g + w * w) +
           (s.re * s.d_im - s.im * s.d_re) / (s.re * s.re + s.im * s.im);
}

FrequencyResponse transfer_function(const VocSpecies &species, const FrequencyGrid &grid, Exec exec)
{
    const Kinetics &kin = species.require_kinetics();
    auto r = FrequencyResponse::sized(grid);
    for_each_index(grid.size(), exec, [&](std::size_t i) {
        const double f = grid[i];
        r.values[i] = tx_transfer(kin, f);
        r.gain[i] = std::abs(r.values[i]);
        r.log10_gain[i] = std::log10(r.gain[i]);
        r.normalized_gain[i] = tx_gain(kin, f);
        r.phase[i] = tx_phase(kin, f);
        r.delay[i] = tx_delay(kin, f);
    });
    const double peak = *std::max_element(r.normalized_gain.begin(), r.normalized_gain.end());
    for (double &g : r.normalized_gain)
        g /= peak;
    return r;
}

FrequencyResponse tx_normalized_gain(const VocSpecies &species, const FrequencyGrid &grid, Exec exec)
{
    species.require_kinetics();
    require_dc(grid, "tx_normalized_gain");
    return transfer_function(species, grid, exec);
}

FrequencyResponse tx_phase_delay(const VocSpecies &species, const FrequencyGrid &grid, Exec exec)
{
    return transfer_function(species, grid, exec);
}

FrequencyResponse blend_tx_response(const Blend &blend, const FrequencyGrid &grid, Exec exec)
{
    for (const auto &c : blend.components())
        c.species.require_kinetics();
    auto r = FrequencyResponse::sized(grid);
    const auto parts = blend.components();
    for_each_index(grid.size(), exec, [&](std::size_t i) {
        const cplx jw(0.0, kTwoPi * grid[i]);
        const cplx dj(0.0, kTwoPi); // d(jw)/df
        cplx h{};
        cplx dh{};
        for (const auto &c : parts) {
            const Kinetics &k = *c.species.kinetics;
            const cplx gas = k.k_g / (jw + k.k_g);
            const cplx aq = k.k_a * k.eta / (jw + k.k_a);
            const cplx lip = k.k_l * (1.0 - k.eta) / (jw + k.k_l);
            const cplx d_gas = -dj * gas / (jw + k.k_g);
            const cplx d_pools = -dj * (aq / (jw + k.k_a) + lip / (jw + k.k_l));
            h += c.fraction * gas * (aq + lip);
            dh += c.fraction * (d_gas * (aq + lip) + gas * d_pools);
        }
        r.values[i] = h;
        r.gain[i] = std::abs(h);
        r.log10_gain[i] = std::log10(r.gain[i]);
        r.phase[i] = std::arg(h);
        r.delay[i] = -std::imag(dh / h);
    });
    const double peak = *std::max_element(r.gain.begin(), r.gain.end());
    for (std::size_t i = 0; i < r.size(); ++i)
        r.normalized_gain[i] = r.gain[i] / peak;
    return r;
}

} // namespace voclink
