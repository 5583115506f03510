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

#include "voclink/frequency.hpp"

namespace voclink {

/// Cascade of transmitter, channel and receiver: normalized gains multiply,
/// phases and delays add. Throws GridMismatch unless all grids are identical.
FrequencyResponse end_to_end_response(const FrequencyResponse &tx, const FrequencyResponse &channel,
                                      const FrequencyResponse &rx);

/// Lowest frequency at which the normalized gain falls to 1/sqrt(2), linearly
/// interpolated between grid points. Throws NeverCrosses if it stays above.
double bandwidth_3db(const FrequencyResponse &response);

/// Shannon capacity B log2(1 + SNR) in bit/s, SNR linear.
double capacity(double bandwidth, double snr_linear);

} // namespace voclink
