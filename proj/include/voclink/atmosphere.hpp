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

#include "voclink/core_data.hpp"

namespace voclink {

/// Power law sigma = coef * x^exponent for the lateral (y) and vertical (z) spreads.
struct DispersionLaw {
    double y_coef, y_exp;
    double z_coef, z_exp;
};

struct DispersionCoefficients {
    double sigma_y = 0.0; // m
    double sigma_z = 0.0; // m
    double sigma_x = 0.0; // m, geometric mean of sigma_y and sigma_z

    /// sigma_y * sigma_z, which equals sigma_x^2.
    double product() const noexcept { return sigma_y * sigma_z; }
};

/// Pasquill-Gifford puff coefficients for one stability class.
DispersionLaw dispersion_law(StabilityClass cls) noexcept;

/// Throws NonPositiveDistance unless x > 0.
DispersionCoefficients dispersion(double x, StabilityClass cls);

/// Ambient oxidant levels in molecules/cm^3.
struct OxidantLevels {
    double c_oh = 0.0;
    double c_no3 = 0.0;
    double c_o3 = 0.0;
};

OxidantLevels oxidant_levels(const Environment &env) noexcept;

/// Effective first-order loss rate k_oh [OH] + k_no3 [NO3] + k_o3 [O3], 1/s.
double k_eff(const OxidantRates &rates, const OxidantLevels &levels) noexcept;
double k_eff(const VocSpecies &species, const Environment &env) noexcept;

/// Fraction-weighted mean of the per-species k_eff.
double blend_k_eff(const Blend &blend, const Environment &env) noexcept;

} // namespace voclink
