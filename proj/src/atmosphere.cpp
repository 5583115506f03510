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

#include "voclink/atmosphere.hpp"

#include <cmath>
#include <string>

#include "voclink/errors.hpp"

namespace voclink {

DispersionLaw dispersion_law(StabilityClass cls) noexcept
{
    switch (cls) {
    case StabilityClass::A: return {0.18, 0.92, 0.60, 0.75};
    case StabilityClass::B: return {0.14, 0.92, 0.53, 0.73};
    case StabilityClass::C: return {0.10, 0.92, 0.34, 0.71};
    case StabilityClass::D: return {0.06, 0.92, 0.15, 0.70};
    case StabilityClass::E: return {0.04, 0.92, 0.10, 0.65};
    case StabilityClass::F: return {0.02, 0.89, 0.05, 0.61};
    }
    return {0.06, 0.92, 0.15, 0.70};
}

DispersionCoefficients dispersion(double x, StabilityClass cls)
{
    if (!(x > 0.0))
        fail(ErrorKind::NonPositiveDistance, "downwind distance must be > 0, got " + std::to_string(x));
    const DispersionLaw law = dispersion_law(cls);
    DispersionCoefficients d;
    d.sigma_y = law.y_coef * std::pow(x, law.y_exp);
    d.sigma_z = law.z_coef * std::pow(x, law.z_exp);
    d.sigma_x = std::sqrt(d.sigma_y * d.sigma_z);
    return d;
}

OxidantLevels oxidant_levels(const Environment &env) noexcept { return {env.c_oh, env.c_no3, env.c_o3}; }

double k_eff(const OxidantRates &rates, const OxidantLevels &levels) noexcept
{
    return rates.k_oh * levels.c_oh + rates.k_no3 * levels.c_no3 + rates.k_o3 * levels.c_o3;
}

double k_eff(const VocSpecies &species, const Environment &env) noexcept
{
    return k_eff(species.oxidant, oxidant_levels(env));
}

double blend_k_eff(const Blend &blend, const Environment &env) noexcept
{
    double k = 0.0;
    for (const auto &c : blend.components())
        k += c.fraction * k_eff(c.species, env);
    return k;
}

} // namespace voclink
