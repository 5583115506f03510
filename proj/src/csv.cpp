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

#include "voclink/csv.hpp"

#include <cmath>
#include <cstdio>

#include "voclink/errors.hpp"

namespace voclink {

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    if (value == 0.0)
        value = 0.0; // no "-0.00000000e+00"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", value);
    return buf;
}

CsvWriter::CsvWriter(std::ostream &out, std::initializer_list<std::string_view> header)
    : out_(out), columns_(header.size())
{
    bool first = true;
    for (const auto h : header) {
        out_ << (first ? "" : ",") << h;
        first = false;
    }
    out_ << '\n';
}

void CsvWriter::row(std::initializer_list<CsvCell> cells)
{
    if (cells.size() != columns_)
        fail(ErrorKind::ValidationError, "CSV row width does not match header");
    bool first = true;
    for (const auto &cell : cells) {
        if (!first)
            out_ << ',';
        first = false;
        if (const auto *d = std::get_if<double>(&cell))
            out_ << format_number(*d);
        else
            out_ << std::get<std::string_view>(cell);
    }
    out_ << '\n';
}

} // namespace voclink
