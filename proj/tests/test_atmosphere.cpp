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

#include "voclink/atmosphere.hpp"
#include "voclink/errors.hpp"

using namespace voclink;

namespace {

constexpr StabilityClass kClasses[] = {StabilityClass::A, StabilityClass::B, StabilityClass::C,
                                       StabilityClass::D, StabilityClass::E, StabilityClass::F};

} // namespace

TEST_SUITE("atmosphere")
{
    TEST_CASE("class D spreads at 1 m and 100 m")
    {
        const auto one = dispersion(1.0, StabilityClass::D);
        CHECK(one.sigma_y == 0.06);
        CHECK(one.sigma_z == 0.15);
        const auto d = dispersion(100.0, StabilityClass::D);
        CHECK(d.sigma_y == doctest::Approx(4.1509858255136189).epsilon(1e-13));
        CHECK(d.sigma_z == doctest::Approx(3.7678296472643702).epsilon(1e-13));
        CHECK(d.sigma_x * d.sigma_x == doctest::Approx(d.product()).epsilon(1e-15));
        CHECK(dispersion(100.0, StabilityClass::A).sigma_y == doctest::Approx(12.452957476540857).epsilon(1e-13));
    }

    TEST_CASE("dispersion table rows")
    {
        const auto f = dispersion_law(StabilityClass::F);
        CHECK(f.y_coef == 0.02);
        CHECK(f.y_exp == 0.89);
        CHECK(f.z_coef == 0.05);
        CHECK(f.z_exp == 0.61);
        const auto b = dispersion_law(StabilityClass::B);
        CHECK(b.z_coef == 0.53);
        CHECK(b.z_exp == 0.73);
    }

    TEST_CASE("spreads grow with distance and shrink with stability")
    {
        for (double x = 1.0; x < 1000.0; x *= 1.3) {
            for (std::size_t c = 0; c < 6; ++c) {
                const auto here = dispersion(x, kClasses[c]);
                const auto further = dispersion(x * 1.3, kClasses[c]);
                REQUIRE(further.sigma_y > here.sigma_y);
                REQUIRE(further.sigma_z > here.sigma_z);
                if (c > 0)
                    REQUIRE(dispersion(x, kClasses[c - 1]).sigma_y > here.sigma_y);
            }
        }
    }

    TEST_CASE("non-positive distance is rejected")
    {
        for (double x : {0.0, -5.0}) {
            try {
                dispersion(x, StabilityClass::D);
                FAIL("expected NonPositiveDistance");
            } catch (const Error &e) {
                CHECK(e.kind() == ErrorKind::NonPositiveDistance);
            }
        }
    }

    TEST_CASE("k_eff from the reference oxidant levels")
    {
        const auto data = builtin_q_ilex();
        const auto env = reference_environment();
        CHECK(k_eff(find_species(data.species, "alpha-pinene"), env) == doctest::Approx(8.40014772).epsilon(1e-13));
        CHECK(blend_k_eff(data.blend, env) == doctest::Approx(3.1706430395612).epsilon(1e-12));
        CHECK(blend_k_eff(builtin_pinus_pinea().blend, env) == doctest::Approx(0.21999847938965162).epsilon(1e-12));
        auto dark = env;
        dark.c_oh = dark.c_no3 = dark.c_o3 = 0.0;
        CHECK(k_eff(data.species[0], dark) == 0.0);
    }

    TEST_CASE("k_eff is linear in each oxidant")
    {
        const auto s = builtin_q_ilex().species[4];
        const OxidantLevels base{2e6, 1e10, 7e11};
        const double k0 = k_eff(s.oxidant, base);
        CHECK(k_eff(s.oxidant, {4e6, 1e10, 7e11}) - k0 == doctest::Approx(s.oxidant.k_oh * 2e6));
        CHECK(k_eff(s.oxidant, {2e6, 3e10, 7e11}) - k0 == doctest::Approx(s.oxidant.k_no3 * 2e10));
        CHECK(k_eff(s.oxidant, {2e6, 1e10, 0.0}) == doctest::Approx(k0 - s.oxidant.k_o3 * 7e11));
    }

    TEST_CASE("blend k_eff is the fraction-weighted mean")
    {
        const auto sp = builtin_q_ilex().species;
        const auto env = reference_environment();
        CHECK(blend_k_eff(Blend("one", 1.0, {{sp[1], 3.0}}), env) == doctest::Approx(k_eff(sp[1], env)));
        const double pair = blend_k_eff(Blend("two", 1.0, {{sp[0], 1.0}, {sp[1], 1.0}}), env);
        CHECK(pair == doctest::Approx(0.5 * (k_eff(sp[0], env) + k_eff(sp[1], env))));
    }
}
