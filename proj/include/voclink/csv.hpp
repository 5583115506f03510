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

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace voclink {

/// Formats a double as scientific notation with 9 significant digits.
std::string format_number(double value);

using CsvCell = std::variant<double, std::string_view>;

/// Header-first CSV writer: '.' decimal point, "\n" line endings.
class CsvWriter {
public:
    CsvWriter(std::ostream &out, std::initializer_list<std::string_view> header);

    void row(std::initializer_list<CsvCell> cells);
    std::size_t columns() const noexcept { return columns_; }

private:
    std::ostream &out_;
    std::size_t columns_;
};

} // namespace voclink
