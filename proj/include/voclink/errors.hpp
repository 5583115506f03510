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

#include <stdexcept>
#include <string>

namespace voclink {

enum class ErrorKind {
    MissingKinetics,
    UnstableStep,
    NonPositiveDistance,
    GridMismatch,
    NeverCrosses,
    NoConvergence,
    ParseError,
    ValidationError,
};

const char *to_string(ErrorKind kind) noexcept;

// Numeric failures map to CLI exit status 3, everything else to 2.
bool is_numeric_failure(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept { return kind_; }
    // Message without the kind prefix that what() carries.
    const std::string &detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &message);

// Throws ValidationError naming `field` unless `ok`.
void require(bool ok, const std::string &field, const std::string &constraint);

} // namespace voclink
