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

#include <cstddef>
#include <cstdint>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace voclink {

/// Execution policy for grid and sweep kernels.
///
/// `serial` is the reference path kept for testing; `parallel` distributes
/// independent points over OpenMP threads. Every kernel writes each output
/// slot from exactly one iteration, so both policies give bitwise-identical
/// results.
enum class Exec { serial, parallel };

template <typename Body>
void for_each_index(std::size_t n, Exec exec, Body &&body)
{
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    // Exceptions must not cross the parallel region; the first one is rethrown.
    std::exception_ptr error;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(voclink_for_each_index)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
}

inline int max_threads() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace voclink
