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
#include <numeric>

#include "voclink/core_data.hpp"
#include "voclink/errors.hpp"
#include "voclink/transmitter.hpp"

using namespace voclink;

namespace {

double fraction_sum(const Blend &b)
{
    double s = 0.0;
    for (const auto &c : b.components())
        s += c.fraction;
    return s;
}

} // namespace

TEST_SUITE("core_data")
{
    TEST_CASE("q_ilex alpha-pinene constants as tabulated")
    {
        const auto data = builtin_q_ilex();
        REQUIRE(data.species.size() == 9);
        const auto &a = find_species(data.species, "alpha-pinene");
        REQUIRE(a.has_kinetics());
        CHECK(a.kinetics->k_a == 0.002459);
        CHECK(a.kinetics->k_l == 3.37791e-5);
        CHECK(a.kinetics->k_g == 0.7);
        CHECK(a.kinetics->eta == 0.867);
        CHECK(a.oxidant.k_oh == 52.3e-12);
        CHECK(a.oxidant.k_no3 == 84e-11);
        CHECK(a.oxidant.k_o3 == 6.16e-17);
    }

    TEST_CASE("q_ilex fractions are the percentages over their sum")
    {
        const auto data = builtin_q_ilex();
        CHECK(data.blend.q0() == kReferenceQ0);
        CHECK(data.blend.component("alpha-pinene").percent == 32.0718);
        CHECK(data.blend.component("alpha-pinene").fraction == doctest::Approx(0.320718).epsilon(1e-6));
        CHECK(std::abs(fraction_sum(data.blend) - 1.0) < 1e-9);
    }

    TEST_CASE("pinus_pinea composition and oxidation-only compounds")
    {
        const auto data = builtin_pinus_pinea();
        REQUIRE(data.blend.size() == 9);
        CHECK(std::abs(fraction_sum(data.blend) - 1.0) < 1e-9);
        const auto &ocimene = data.blend.component("trans-beta-ocimene");
        CHECK(ocimene.percent == 70.7136);
        // The column sums to 94.4582 %, so renormalization lifts the fraction.
        CHECK(ocimene.fraction == doctest::Approx(70.7136 / 94.4582).epsilon(1e-12));
        const auto &acetone = find_species(data.species, "acetone");
        CHECK_FALSE(acetone.has_kinetics());
        CHECK(acetone.oxidant.k_oh == 0.17e-12);
        CHECK(acetone.oxidant.k_no3 == 2.9e-17);
        CHECK(acetone.oxidant.k_o3 == 0.9e-21);
    }

    TEST_CASE("transmitter rejects compounds without pool kinetics")
    {
        const auto data = builtin_pinus_pinea();
        const auto &acetone = find_species(data.species, "acetone");
        try {
            transfer_function(acetone, FrequencyGrid({0.0, 1e-3}));
            FAIL("expected MissingKinetics");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::MissingKinetics);
        }
    }

    TEST_CASE("blend validation")
    {
        const auto sp = builtin_q_ilex().species;
        CHECK_THROWS_AS(Blend("b", 0.0, {{sp[0], 1.0}}), Error);
        CHECK_THROWS_AS(Blend("b", 1.0, {{sp[0], -1.0}}), Error);
        CHECK_THROWS_AS(Blend("b", 1.0, {{sp[0], 1.0}, {sp[0], 2.0}}), Error);
        CHECK_THROWS_AS(Blend("b", 1.0, {}), Error);
        const Blend two("b", 5.0, {{sp[0], 1.0}, {sp[1], 3.0}});
        CHECK(two.component(sp[1].name).fraction == 0.75);
        CHECK(two.with_q0(7.0).q0() == 7.0);
        CHECK_THROWS_AS(two.component("nope"), Error);
    }

    TEST_CASE("species and environment invariants")
    {
        auto s = builtin_q_ilex().species[0];
        s.kinetics->eta = 1.2;
        try {
            s.validate();
            FAIL("expected ValidationError");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::ValidationError);
            CHECK(std::string(e.what()).find("eta") != std::string::npos);
        }
        auto env = reference_environment();
        env.wind_speed = 0.0;
        CHECK_THROWS_AS(env.validate(), Error);
        env = reference_environment();
        env.t_end = env.t_start;
        CHECK_THROWS_AS(env.validate(), Error);
        env = reference_environment();
        env.c_no3 = -1.0;
        CHECK_THROWS_AS(env.validate(), Error);
    }

    TEST_CASE("reference environment and layout")
    {
        const auto env = reference_environment();
        CHECK(env.wind_speed == 7.0);
        CHECK(env.stability == StabilityClass::D);
        CHECK(env.c_oh == 2e6);
        CHECK(env.c_o3 == 7e11);
        CHECK(env.c_no3 == 1e10);
        CHECK(env.t_end == 20.0);
        const auto offsets = reference_noise_offsets();
        REQUIRE(offsets.size() == 5);
        CHECK(offsets[1].y == -1.0);
        CHECK(offsets[4].x == 6.0);
    }

    TEST_CASE("stability class parsing")
    {
        CHECK(parse_stability_class("A") == StabilityClass::A);
        CHECK(parse_stability_class("f") == StabilityClass::F);
        CHECK(to_char(StabilityClass::E) == 'E');
        CHECK_THROWS_AS(parse_stability_class("G"), Error);
        CHECK_THROWS_AS(parse_stability_class(""), Error);
    }
}
