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

#include "voclink/core_data.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "voclink/errors.hpp"

namespace voclink {

void Kinetics::validate(const std::string &owner) const
{
    require(k_a > 0.0, owner + ".k_a", "> 0");
    require(k_l > 0.0, owner + ".k_l", "> 0");
    require(k_g > 0.0, owner + ".k_g", "> 0");
    require(eta >= 0.0 && eta <= 1.0, owner + ".eta", "0 <= eta <= 1");
}

void OxidantRates::validate(const std::string &owner) const
{
    require(k_oh >= 0.0, owner + ".k_oh", ">= 0");
    require(k_no3 >= 0.0, owner + ".k_no3", ">= 0");
    require(k_o3 >= 0.0, owner + ".k_o3", ">= 0");
}

const Kinetics &VocSpecies::require_kinetics() const
{
    if (!kinetics)
        fail(ErrorKind::MissingKinetics, "species '" + name + "' has no pool kinetics");
    return *kinetics;
}

void VocSpecies::validate() const
{
    require(!name.empty(), "species.name", "non-empty");
    if (kinetics)
        kinetics->validate(name);
    oxidant.validate(name);
}

Blend::Blend(std::string name, double q0, std::vector<std::pair<VocSpecies, double>> percentages)
    : name_(std::move(name)), q0_(q0)
{
    require(q0 > 0.0, name_ + ".q0", "> 0");
    require(!percentages.empty(), name_ + ".components", "non-empty");
    double total = 0.0;
    for (const auto &[species, percent] : percentages) {
        require(percent >= 0.0 && std::isfinite(percent), name_ + "." + species.name, "fraction >= 0");
        total += percent;
    }
    require(total > 0.0, name_ + ".components", "positive total");
    components_.reserve(percentages.size());
    for (auto &[species, percent] : percentages) {
        for (const auto &existing : components_)
            require(existing.species.name != species.name, name_ + "." + species.name, "unique");
        components_.push_back({std::move(species), percent, percent / total});
    }
}

const BlendComponent &Blend::component(std::string_view species_name) const
{
    auto it = std::find_if(components_.begin(), components_.end(),
                           [&](const BlendComponent &c) { return c.species.name == species_name; });
    if (it == components_.end())
        fail(ErrorKind::ValidationError,
             "blend '" + name_ + "' has no component '" + std::string(species_name) + "'");
    return *it;
}

Blend Blend::with_q0(double q0) const
{
    require(q0 > 0.0, name_ + ".q0", "> 0");
    Blend copy = *this;
    copy.q0_ = q0;
    return copy;
}

StabilityClass parse_stability_class(std::string_view text)
{
    if (text.size() == 1) {
        switch (text[0]) {
        case 'A': case 'a': return StabilityClass::A;
        case 'B': case 'b': return StabilityClass::B;
        case 'C': case 'c': return StabilityClass::C;
        case 'D': case 'd': return StabilityClass::D;
        case 'E': case 'e': return StabilityClass::E;
        case 'F': case 'f': return StabilityClass::F;
        default: break;
        }
    }
    fail(ErrorKind::ValidationError, "stability_class must be one of A-F, got '" + std::string(text) + "'");
}

char to_char(StabilityClass cls) noexcept { return static_cast<char>('A' + static_cast<int>(cls)); }

void Environment::validate() const
{
    require(wind_speed > 0.0 && std::isfinite(wind_speed), "environment.wind_speed", "> 0");
    require(c_oh >= 0.0, "environment.c_oh", ">= 0");
    require(c_o3 >= 0.0, "environment.c_o3", ">= 0");
    require(c_no3 >= 0.0, "environment.c_no3", ">= 0");
    require(release_height >= 0.0, "environment.release_height", ">= 0");
    require(t_end > t_start, "environment.t_end", "> t_start");
    require(sample_step > 0.0, "environment.sample_step", "> 0");
}

namespace {

VocSpecies make(std::string name, double k_a, double k_l, double k_g, double eta, double k_oh,
                double k_no3, double k_o3)
{
    return {std::move(name), Kinetics{k_a, k_l, k_g, eta}, OxidantRates{k_oh, k_no3, k_o3}};
}

VocSpecies oxidation_only(std::string name, double k_oh, double k_no3, double k_o3)
{
    return {std::move(name), std::nullopt, OxidantRates{k_oh, k_no3, k_o3}};
}

// k_l tabulated in units of 1e-5 1/s; OH, NO3, O3 in 1e-12, 1e-11, 1e-17.
std::vector<VocSpecies> monoterpenoids()
{
    return {
        make("alpha-pinene", 0.002459, 3.37791e-5, 0.7, 0.867, 52.3e-12, 84e-11, 6.16e-17),
        make("beta-pinene", 0.002455, 5.31881e-5, 0.9, 0.846, 74.3e-12, 15e-11, 2.51e-17),
        make("myrcene", 0.001565, 15.281e-5, 3.0, 0.840, 215e-12, 1.1e-11, 47e-17),
        make("sabinene", 0.002953, 0.4044e-5, 2.5, 0.629, 117e-12, 1.0e-11, 8.3e-17),
        make("cis-beta-ocimene", 0.001167, 4.1857e-5, 1.5, 0.782, 252e-12, 2.2e-11, 54e-17),
        make("p-cymene", 0.000844, 0.7434e-5, 2.0, 0.697, 151e-12, 0.99e-11, 0.2e-17),
        make("gamma-terpinene", 0.001395, 2.4189e-5, 1.7, 0.811, 177e-12, 2.9e-11, 14e-17),
        make("alpha-terpinolene", 0.001126, 1.1959e-5, 1.3, 0.736, 225e-12, 9.7e-11, 190e-17),
        make("beta-phellandrene", 0.001319, 0.5852e-5, 2.3, 0.762, 168e-12, 8e-11, 4.7e-17),
    };
}

} // namespace

Dataset builtin_q_ilex()
{
    auto species = monoterpenoids();
    const double percent[] = {32.0718, 24.6972, 12.9217, 10.5861, 5.1687,
                              4.3577, 4.2604, 3.2115, 2.7249};
    std::vector<std::pair<VocSpecies, double>> parts;
    for (std::size_t i = 0; i < species.size(); ++i)
        parts.emplace_back(species[i], percent[i]);
    return {std::move(species), Blend("q_ilex", kReferenceQ0, std::move(parts))};
}

Dataset builtin_pinus_pinea()
{
    const auto shared = monoterpenoids();
    std::vector<VocSpecies> species(shared.begin(), shared.begin() + 5);
    species.push_back(oxidation_only("acetone", 0.17e-12, 2.9e-17, 0.9e-21));
    species.push_back(oxidation_only("limonene", 164e-12, 1.22e-11, 21e-17));
    species.push_back(oxidation_only("trans-beta-ocimene", 252e-12, 2.2e-11, 54e-17));
    species.push_back(oxidation_only("linalool", 159e-12, 1.12e-11, 43e-17));

    const double percent[] = {0.4341, 0.0894, 1.3788, 0.4979, 1.3660,
                              12.3057, 1.2384, 70.7136, 6.4343};
    std::vector<std::pair<VocSpecies, double>> parts;
    for (std::size_t i = 0; i < species.size(); ++i)
        parts.emplace_back(species[i], percent[i]);
    return {std::move(species), Blend("pinus_pinea", kReferenceQ0, std::move(parts))};
}

Environment reference_environment() { return Environment{}; }

std::vector<Position> reference_noise_offsets()
{
    return {{2.0, 1.0, 0.0}, {2.0, -1.0, 0.0}, {4.0, 2.0, 0.0}, {4.0, -2.0, 0.0}, {6.0, 0.0, 0.0}};
}

const VocSpecies &find_species(std::span<const VocSpecies> species, std::string_view name)
{
    auto it = std::find_if(species.begin(), species.end(),
                           [&](const VocSpecies &s) { return s.name == name; });
    if (it == species.end())
        fail(ErrorKind::ValidationError, "unknown species '" + std::string(name) + "'");
    return *it;
}

} // namespace voclink
