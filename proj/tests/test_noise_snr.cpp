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

#include "doctest.h"

#include <array>
#include <cmath>
#include <vector>

#include "voclink/atmosphere.hpp"
#include "voclink/noise_snr.hpp"

using namespace voclink;

namespace {

const Position kReceiver{100.0, 0.0, 0.0};

} // namespace

TEST_SUITE("noise_snr")
{
    TEST_CASE("sampling instants")
    {
        const auto t = sample_times(reference_environment());
        REQUIRE(t.size() == 21);
        CHECK(t.front() == 0.0);
        CHECK(t.back() == 20.0);
    }

    TEST_CASE("average power")
    {
        const auto d = dispersion(100.0, StabilityClass::D);
        const std::array<double, 1> at_peak{100.0 / 7.0};
        CHECK(avg_power(3.0, 100.0, 0.0, 0.0, d.sigma_y, d.sigma_z, 7.0, at_peak) == doctest::Approx(9.0).epsilon(1e-15));
        const auto times = sample_times(reference_environment());
        const double p1 = avg_power(1.0, 100.0, 0.0, 8.4, d.sigma_y, d.sigma_z, 7.0, times);
        CHECK(p1 == doctest::Approx(1.5787879845043875e-96).epsilon(1e-12));
        CHECK(avg_power(2.0, 100.0, 0.0, 8.4, d.sigma_y, d.sigma_z, 7.0, times) == doctest::Approx(4.0 * p1).epsilon(1e-15));
    }

    TEST_CASE("signal against the first noise source of the reference layout")
    {
        const auto env = reference_environment();
        const auto signal = blend_source(builtin_q_ilex().blend, env);
        const auto noise = blend_source(builtin_pinus_pinea().blend, env, 2.0, 1.0);
        CHECK(signal.q == kReferenceQ0);
        CHECK(noise.k == doctest::Approx(0.21999847938965162).epsilon(1e-12));
        CHECK(snr(signal, noise, env, kReceiver) == doctest::Approx(5.1452171065762109e-36).epsilon(1e-9));
    }

    TEST_CASE("degenerate ratios")
    {
        const auto env = reference_environment();
        const auto s = blend_source(builtin_q_ilex().blend, env);
        CHECK(snr(s, s, env, kReceiver) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(to_db(1.0) == 0.0);
        auto silent = s;
        silent.q = 0.0;
        CHECK(std::isinf(snr(s, silent, env, kReceiver)));
        // A receiver upwind of the noise source sees none of it.
        auto behind = s;
        behind.x0 = 150.0;
        CHECK(received_power(behind, kReceiver, env, sample_times(env)) == 0.0);
    }

    TEST_CASE("multiple sources")
    {
        const auto env = reference_environment();
        const std::vector<PointSource> signals{blend_source(builtin_q_ilex().blend, env)};
        const auto n = blend_source(builtin_pinus_pinea().blend, env, 2.0, 1.0);
        const Position rx{30.0, 0.0, 0.0};
        const double single = snr(signals[0], n, env, rx);
        CHECK(snr_multi(signals, std::vector<PointSource>{n}, env, rx) == doctest::Approx(single).epsilon(1e-15));
        CHECK(snr_multi(signals, std::vector<PointSource>{n, n}, env, rx) == doctest::Approx(0.5 * single).epsilon(1e-15));

        std::vector<PointSource> noises;
        for (const auto &o : reference_noise_offsets())
            noises.push_back(blend_source(builtin_pinus_pinea().blend, env, o.x, o.y));
        const auto cumulative = snr_cumulative(signals, noises, env, rx);
        REQUIRE(cumulative.size() == 5);
        CHECK(cumulative[0] == doctest::Approx(single).epsilon(1e-15));
        CHECK(cumulative[4] == doctest::Approx(snr_multi(signals, noises, env, rx)).epsilon(1e-15));
        for (std::size_t i = 1; i < cumulative.size(); ++i)
            CHECK(cumulative[i] < cumulative[i - 1]);
    }

    TEST_CASE("common scaling of every emission leaves the ratio unchanged")
    {
        const auto env = reference_environment();
        const Position rx{60.0, 0.0, 0.0};
        auto s = blend_source(builtin_q_ilex().blend, env);
        auto n = blend_source(builtin_pinus_pinea().blend, env, 4.0, -2.0);
        const double base = snr(s, n, env, rx);
        s.q *= 13.0;
        n.q *= 13.0;
        CHECK(snr(s, n, env, rx) == doctest::Approx(base).epsilon(1e-13));
    }

    TEST_CASE("ratio falls as the noise emission grows")
    {
        const auto env = reference_environment();
        const Position rx{60.0, 0.0, 0.0};
        const auto s = blend_source(builtin_q_ilex().blend, env);
        double prev = INFINITY;
        for (double q = 1e2; q <= 1e6; q *= 3.0) {
            const double r = snr(s, blend_source(builtin_pinus_pinea().blend, env, 6.0, 0.0, q), env, rx);
            REQUIRE(r < prev);
            prev = r;
        }
    }
}
