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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace voclink {

/// Pool-release kinetics of one compound (all rates in 1/s).
struct Kinetics {
    double k_a = 0.0; ///< aqueous pool release
    double k_l = 0.0; ///< lipid pool release
    double k_g = 0.0; ///< gas phase pool to ambient air
    double eta = 0.0; ///< fraction partitioned into the aqueous pool

    void validate(const std::string &owner) const;
};

/// Second-order oxidation rate constants, cm^3 molecule^-1 s^-1.
struct OxidantRates {
    double k_oh = 0.0;
    double k_no3 = 0.0;
    double k_o3 = 0.0;

    void validate(const std::string &owner) const;
};

/// Physicochemical constants of one volatile compound. Compounds without pool
/// kinetics are valid for channel and noise use only.
struct VocSpecies {
    std::string name;
    std::optional<Kinetics> kinetics;
    OxidantRates oxidant;

    bool has_kinetics() const noexcept { return kinetics.has_value(); }

    /// Throws MissingKinetics when the compound cannot drive a transmitter.
    const Kinetics &require_kinetics() const;

    void validate() const;
};

struct BlendComponent {
    VocSpecies species;
    double percent = 0.0;  ///< composition as tabulated
    double fraction = 0.0; ///< percent renormalized so all fractions sum to 1
};

/// A VOC mixture released as `q0` molecules in total.
class Blend {
public:
    Blend() = default;

    /// Builds a blend from tabulated percentages, renormalizing to unit sum.
    Blend(std::string name, double q0, std::vector<std::pair<VocSpecies, double>> percentages);

    const std::string &name() const noexcept { return name_; }
    double q0() const noexcept { return q0_; }
    std::span<const BlendComponent> components() const noexcept { return components_; }
    std::size_t size() const noexcept { return components_.size(); }

    const BlendComponent &component(std::string_view species_name) const;

    Blend with_q0(double q0) const;

private:
    std::string name_;
    double q0_ = 0.0;
    std::vector<BlendComponent> components_;
};

enum class StabilityClass { A, B, C, D, E, F };

StabilityClass parse_stability_class(std::string_view text);
char to_char(StabilityClass cls) noexcept;

/// Ambient conditions. Oxidant concentrations in molecules/cm^3 so that
/// k_eff = sum(k_i * [ox]_i) lands directly in 1/s.
struct Environment {
    double wind_speed = 7.0; // m/s
    StabilityClass stability = StabilityClass::D;
    double c_oh = 2e6;
    double c_o3 = 7e11;
    double c_no3 = 1e10;
    double release_height = 0.0; // m
    double t_start = 0.0;        // s
    double t_end = 20.0;         // s
    double sample_step = 1.0;    // s

    void validate() const;
};

struct Position {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct Dataset {
    std::vector<VocSpecies> species;
    Blend blend;
};

/// The nine Q. ilex monoterpenoids with pool and oxidation kinetics.
Dataset builtin_q_ilex();

/// The Pinus pinea noise blend. Acetone, limonene, trans-beta-ocimene and
/// linalool carry oxidation constants only.
Dataset builtin_pinus_pinea();

/// Total molecules released per puff in the reference scenario.
inline constexpr double kReferenceQ0 = 10000.0;

/// Reference ambient conditions: class D, u = 7 m/s, OH 2e6, O3 7e11,
/// NO3 1e10 molecules/cm^3, t in [0, 20] s at 1 s spacing.
Environment reference_environment();

/// Noise-source offsets (m) of the five-source reference layout.
std::vector<Position> reference_noise_offsets();

const VocSpecies &find_species(std::span<const VocSpecies> species, std::string_view name);

} // namespace voclink
