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

#include <cmath>
#include <numbers>
#include <vector>

#include "voclink/oracle.hpp"

using namespace voclink::oracle;

TEST_SUITE("oracle")
{
    TEST_CASE("quadrature fixtures")
    {
        CHECK(quad_integrate([](double t) { return t; }, 0.0, 1.0, 1e-12) == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(quad_integrate([](double t) { return std::exp(-t); }, 0.0, 50.0, 1e-10) ==
              doctest::Approx(1.0).epsilon(1e-8));
        CHECK(quad_integrate_relative([](double t) { return 1e-30 * std::exp(-t * t); }, -10.0, 10.0, 1e-10, 8) ==
              doctest::Approx(1e-30 * std::sqrt(std::numbers::pi)).epsilon(1e-9));
        CHECK_THROWS_AS(quad_integrate([](double t) { return std::sin(1.0 / t); }, 1e-9, 1.0, 1e-14, 1, 12),
                        NoConvergence);
    }

    TEST_CASE("DFT fixtures")
    {
        const std::vector<double> constant(64, 2.0);
        const auto c = dft_magnitude(constant, 0.5);
        REQUIRE(c.frequency.size() == 33);
        CHECK(c.frequency[1] == doctest::Approx(1.0 / 32.0));
        CHECK(c.magnitude[0] == doctest::Approx(64.0));
        for (std::size_t k = 1; k < c.magnitude.size(); ++k)
            CHECK(c.magnitude[k] < 1e-9);

        std::vector<double> impulse(32, 0.0);
        impulse[0] = 1.0;
        for (double m : dft_magnitude(impulse, 1.0).magnitude)
            CHECK(m == doctest::Approx(1.0).epsilon(1e-14));
        CHECK_THROWS(dft_magnitude(std::vector<double>{1.0}, 1.0));
    }

    TEST_CASE("sampled Gaussian pulse has a Gaussian spectrum")
    {
        const double s = 0.7, dt = 0.05;
        std::vector<double> x;
        for (int n = 0; n < 400; ++n) {
            const double t = n * dt - 10.0;
            x.push_back(std::exp(-0.5 * t * t / (s * s)));
        }
        const auto spec = dft_magnitude(x, dt);
        const double area = s * std::sqrt(2.0 * std::numbers::pi);
        for (std::size_t k = 0; k < spec.frequency.size(); ++k) {
            const double w = 2.0 * std::numbers::pi * spec.frequency[k];
            const double expected = area * std::exp(-0.5 * w * w * s * s);
            if (expected < 1e-3 * area)
                break;
            CHECK(spec.magnitude[k] == doctest::Approx(expected).epsilon(0.02));
        }
        CHECK(dtft_magnitude(x, dt, 0.0) == doctest::Approx(area).epsilon(1e-9));
    }

    TEST_CASE("finite differences")
    {
        CHECK(fd_derivative([](double x) { return x * x; }, 3.0, 1e-3) == doctest::Approx(6.0).epsilon(1e-10));
        CHECK(std::abs(fd_derivative([](double x) { return std::exp(-x * x); }, 0.0, 1e-4)) < 1e-12);
        CHECK_THROWS(fd_derivative([](double x) { return x; }, 0.0, 0.0));
    }

    TEST_CASE("sine fit recovers amplitude under a drifting baseline")
    {
        const double f = 0.25;
        SineFit fit(f, 100.0, 16.0);
        for (double t = 100.0; t <= 116.0; t += 0.01)
            fit.add(t, 5.0 + 0.01 * (t - 100.0) + 0.3 * std::sin(2.0 * std::numbers::pi * f * t + 0.4));
        CHECK(fit.amplitude() == doctest::Approx(0.3).epsilon(1e-9));
    }
}
