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

#include "voclink/errors.hpp"

namespace voclink {

const char *to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::MissingKinetics: return "MissingKinetics";
    case ErrorKind::UnstableStep: return "UnstableStep";
    case ErrorKind::NonPositiveDistance: return "NonPositiveDistance";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::NeverCrosses: return "NeverCrosses";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

bool is_numeric_failure(ErrorKind kind) noexcept
{
    return kind == ErrorKind::UnstableStep || kind == ErrorKind::NoConvergence ||
           kind == ErrorKind::NeverCrosses;
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message)
{
}

void fail(ErrorKind kind, const std::string &message) { throw Error(kind, message); }

void require(bool ok, const std::string &field, const std::string &constraint)
{
    if (!ok)
        fail(ErrorKind::ValidationError, field + " must satisfy " + constraint);
}

} // namespace voclink
