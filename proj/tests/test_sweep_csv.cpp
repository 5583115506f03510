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

#include <sstream>

#include "voclink/csv.hpp"
#include "voclink/errors.hpp"
#include "voclink/sweep.hpp"

using namespace voclink;

TEST_SUITE("sweep_csv")
{
    TEST_CASE("comma lists and ranges")
    {
        CHECK(parse_sweep("7") == std::vector<double>{7.0});
        CHECK(parse_sweep("10, 20,50") == std::vector<double>{10.0, 20.0, 50.0});
        const auto r = parse_sweep("10:10:200");
        REQUIRE(r.size() == 20);
        CHECK(r.back() == 200.0);
        CHECK(parse_sweep("0:0.1:0.3").size() == 4);
        CHECK(parse_sweep("1e-3:1e-3:1e-3") == std::vector<double>{1e-3});
    }

    TEST_CASE("malformed sweeps")
    {
        for (const char *bad : {"", "  ", "1,,2", "a", "1:0:5", "5:1:1", "1:2", "1:2:3:4", "1e999"})
            CHECK_THROWS_AS(parse_sweep(bad), Error);
    }

    TEST_CASE("log grids")
    {
        const auto g = parse_log_grid("1e-6:1:7");
        REQUIRE(g.size() == 8);
        CHECK(g[0] == 0.0);
        CHECK(g[1] == doctest::Approx(1e-6));
        CHECK(g[4] == doctest::Approx(1e-3));
        CHECK(g[7] == doctest::Approx(1.0));
        CHECK_THROWS_AS(parse_log_grid("0:1:5"), Error);
        CHECK_THROWS_AS(parse_log_grid("1:10:1"), Error);
        CHECK_THROWS_AS(parse_log_grid("1:10:2.5"), Error);
    }

    TEST_CASE("number formatting has nine significant digits")
    {
        CHECK(format_number(0.0) == "0.00000000e+00");
        CHECK(format_number(-0.0) == "0.00000000e+00");
        CHECK(format_number(123.456789012) == "1.23456789e+02");
        CHECK(format_number(-2.5e-300) == "-2.50000000e-300");
        CHECK(format_number(1.0 / 0.0) == "inf");
    }

    TEST_CASE("writer")
    {
        std::ostringstream out;
        CsvWriter csv(out, {"f_hz", "species", "gain"});
        csv.row({1.0, std::string_view("alpha-pinene"), 0.5});
        CHECK(out.str() == "f_hz,species,gain\n1.00000000e+00,alpha-pinene,5.00000000e-01\n");
        CHECK_THROWS_AS(csv.row({1.0}), Error);
    }
}
