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

#include "voclink/sweep.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "voclink/errors.hpp"

namespace voclink {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view raw)
{
    const auto s = trim(raw);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value))
        fail(ErrorKind::ValidationError, "malformed number '" + std::string(raw) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

} // namespace

std::vector<double> parse_sweep(std::string_view text)
{
    if (trim(text).empty())
        fail(ErrorKind::ValidationError, "empty sweep specification");
    const auto range = split(text, ':');
    if (range.size() == 3) {
        const double start = parse_number(range[0]);
        const double step = parse_number(range[1]);
        const double end = parse_number(range[2]);
        require(step > 0.0, "sweep step", "> 0");
        require(end >= start, "sweep end", ">= start");
        const auto n = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = start + static_cast<double>(i) * step;
        return out;
    }
    if (range.size() != 1)
        fail(ErrorKind::ValidationError, "sweep must be a comma list or start:step:end, got '" +
                                             std::string(text) + "'");
    std::vector<double> out;
    for (const auto part : split(text, ','))
        out.push_back(parse_number(part));
    return out;
}

FrequencyGrid parse_log_grid(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 3)
        fail(ErrorKind::ValidationError, "log grid must be lo:hi:n, got '" + std::string(text) + "'");
    const double n = parse_number(parts[2]);
    require(n >= 2.0 && n == std::floor(n), "log grid n", "integer >= 2");
    return FrequencyGrid::logarithmic(parse_number(parts[0]), parse_number(parts[1]),
                                      static_cast<std::size_t>(n), true);
}

} // namespace voclink
