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

#include <cstdlib>
#include <cstring>
#include <string>
#include <tuple>

#include "voclink/errors.hpp"
#include "voclink/scenario.hpp"

using namespace voclink;

namespace {

const std::filesystem::path kFixtures = VOCLINK_TEST_FIXTURES;
const std::filesystem::path kShipped = std::filesystem::path(VOCLINK_SCENARIO_DIR) / "q_ilex.json";

ErrorKind load_error(const std::filesystem::path &path, std::string &message)
{
    try {
        load_scenario(path);
    } catch (const Error &e) {
        message = e.what();
        return e.kind();
    }
    FAIL("expected an error loading " << path);
    return ErrorKind::ValidationError;
}

void check_same(const Scenario &a, const Scenario &b)
{
    REQUIRE(a.species.size() == b.species.size());
    for (std::size_t i = 0; i < a.species.size(); ++i) {
        const auto &x = a.species[i];
        const auto &y = b.species[i];
        CHECK(x.name == y.name);
        REQUIRE(x.has_kinetics() == y.has_kinetics());
        if (x.kinetics) {
            CHECK(std::memcmp(&*x.kinetics, &*y.kinetics, sizeof(Kinetics)) == 0);
        }
        CHECK(std::memcmp(&x.oxidant, &y.oxidant, sizeof(OxidantRates)) == 0);
    }
    REQUIRE(a.blends.size() == b.blends.size());
    for (std::size_t i = 0; i < a.blends.size(); ++i) {
        CHECK(a.blends[i].name() == b.blends[i].name());
        CHECK(a.blends[i].q0() == b.blends[i].q0());
        REQUIRE(a.blends[i].size() == b.blends[i].size());
        for (std::size_t j = 0; j < a.blends[i].size(); ++j) {
            CHECK(a.blends[i].components()[j].percent == b.blends[i].components()[j].percent);
            CHECK(a.blends[i].components()[j].fraction == b.blends[i].components()[j].fraction);
        }
    }
    const auto env_fields = [](const Environment &e) {
        return std::tuple(e.wind_speed, e.stability, e.c_oh, e.c_o3, e.c_no3, e.release_height, e.t_start, e.t_end,
                          e.sample_step);
    };
    CHECK(env_fields(a.environment) == env_fields(b.environment));
    const auto leaf_fields = [](const LeafParams &l) {
        return std::tuple(l.area, l.conductance, l.volume, l.k_la, l.growth_rate);
    };
    CHECK(leaf_fields(a.simulation.leaf) == leaf_fields(b.simulation.leaf));
    CHECK(a.simulation.delta_t == b.simulation.delta_t);
    CHECK(a.simulation.delta_f == b.simulation.delta_f);
    CHECK(a.geometry.signal_blend == b.geometry.signal_blend);
    CHECK(a.geometry.noise_sources.size() == b.geometry.noise_sources.size());
}

} // namespace

TEST_SUITE("scenario")
{
    TEST_CASE("built-in scenario contents")
    {
        const auto s = builtin_scenario();
        CHECK(s.species.size() == 13);
        CHECK(s.blends.size() == 2);
        CHECK(s.signal_blend().name() == "q_ilex");
        REQUIRE(s.geometry.noise_sources.size() == 5);
        const auto noises = s.noise_sources();
        CHECK(noises[3].x0 == 4.0);
        CHECK(noises[3].y0 == -2.0);
        CHECK(noises[3].q == kReferenceQ0);
    }

    TEST_CASE("canonical text round-trips bit for bit")
    {
        const auto s = builtin_scenario();
        const auto text = to_json(s);
        const auto back = parse_scenario(text);
        check_same(s, back);
        CHECK(to_json(back) == text);
    }

    TEST_CASE("shipped file matches the built-in datasets")
    {
        const auto loaded = load_scenario(kShipped);
        check_same(builtin_scenario(), loaded);
        const auto ilex = builtin_q_ilex();
        for (const auto &sp : ilex.species) {
            const auto &c = loaded.signal_blend().component(sp.name);
            CHECK(c.fraction == ilex.blend.component(sp.name).fraction);
        }
    }

    TEST_CASE("out-of-range eta names the field")
    {
        std::string msg;
        CHECK(load_error(kFixtures / "bad_eta.json", msg) == ErrorKind::ValidationError);
        CHECK(msg.find("eta") != std::string::npos);
    }

    TEST_CASE("unknown keys are rejected")
    {
        std::string msg;
        CHECK(load_error(kFixtures / "unknown_key.json", msg) == ErrorKind::ValidationError);
        CHECK(msg.find("environment.humidity") != std::string::npos);
    }

    TEST_CASE("syntax errors report line and column")
    {
        std::string msg;
        CHECK(load_error(kFixtures / "malformed.json", msg) == ErrorKind::ParseError);
        CHECK(msg.find("line 8") != std::string::npos);
        CHECK(msg.find("column") != std::string::npos);
    }

    TEST_CASE("type errors name the field")
    {
        std::string msg;
        CHECK(load_error(kFixtures / "wrong_type.json", msg) == ErrorKind::ParseError);
        CHECK(msg.find("environment.wind_speed") != std::string::npos);
        CHECK(load_error(kFixtures / "partial_kinetics.json", msg) == ErrorKind::ValidationError);
        CHECK(msg.find("k_g") != std::string::npos);
        CHECK(load_error(kFixtures / "does_not_exist.json", msg) == ErrorKind::ParseError);
    }

    TEST_CASE("bandwidth override is carried through")
    {
        const auto s = load_scenario(kFixtures / "delta_f_override.json");
        REQUIRE(s.simulation.delta_f.has_value());
        CHECK(*s.simulation.delta_f == 9.21e-6);
    }

    TEST_CASE("omitted sections take reference defaults")
    {
        const auto s = load_scenario(kFixtures / "minimal.json");
        CHECK(s.signal_blend().q0() == 500.0);
        CHECK(s.environment.wind_speed == 7.0);
        CHECK(s.geometry.receiver.x == 100.0);
        CHECK(s.geometry.noise_sources.empty());
        CHECK(s.simulation.leaf.k_la == 10.0);
    }

    TEST_CASE("fixture directory override")
    {
        ::setenv("VOCLINK_FIXTURE_DIR", kFixtures.c_str(), 1);
        CHECK(resolve_fixture("minimal.json") == kFixtures / "minimal.json");
        CHECK(load_scenario("minimal.json").signal_blend().name() == "solo");
        ::unsetenv("VOCLINK_FIXTURE_DIR");
        CHECK(resolve_fixture("minimal.json") == std::filesystem::path("minimal.json"));
    }

    TEST_CASE("references must resolve")
    {
        auto text = to_json(builtin_scenario());
        const auto pos = text.find("\"signal_blend\": \"q_ilex\"");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 24, "\"signal_blend\": \"q_nope\"");
        CHECK_THROWS_AS(parse_scenario(text), Error);
    }
}
