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

#include "voclink/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "voclink/atmosphere.hpp"
#include "voclink/channel_constitutive.hpp"
#include "voclink/channel_stress.hpp"
#include "voclink/csv.hpp"
#include "voclink/end_to_end.hpp"
#include "voclink/errors.hpp"
#include "voclink/noise_snr.hpp"
#include "voclink/receiver.hpp"
#include "voclink/transmitter.hpp"

namespace voclink {

namespace {

constexpr std::array kCommands{
    CommandInfo{"tx-gain", "f_hz,species,gain,normalized_gain,attenuation_db",
                "transmitter gain per species and for the blend"},
    CommandInfo{"tx-delay", "f_hz,species,phase_rad,delay_s", "transmitter phase and group delay"},
    CommandInfo{"channel-gain", "f_hz,species,gain_log10,attenuation_db,x_m,u_mps",
                "puff channel gain per species and for the blend"},
    CommandInfo{"channel-delay", "x_m,u_mps,species,k_eff,delay_s", "puff channel delay"},
    CommandInfo{"plume-gain", "f_hz,species,gain,normalized_gain,attenuation_db,x_m,u_mps",
                "constitutive plume response"},
    CommandInfo{"snr-sweep", "x_m,u_mps,noise_sources,snr,snr_db",
                "SNR vs distance with 1..N noise sources"},
    CommandInfo{"bandwidth-sweep", "x_m,u_mps,bandwidth_hz", "-3 dB puff channel bandwidth"},
    CommandInfo{"capacity-sweep", "x_m,u_mps,bandwidth_hz,snr,capacity_bps",
                "Shannon capacity with all noise sources"},
    CommandInfo{"e2e-gain", "f_hz,x_m,u_mps,tx_gain,channel_gain,rx_gain,e2e_gain,attenuation_db",
                "normalized gains of each stage and their product"},
    CommandInfo{"e2e-delay", "f_hz,x_m,u_mps,tx_delay_s,channel_delay_s,rx_delay_s,e2e_delay_s",
                "stage delays and their sum"},
    CommandInfo{"rx-response", "f_hz,gain,normalized_gain,phase_rad,delay_s", "leaf uptake response"},
    CommandInfo{"tx-sim", "t_s,s_a,s_l,s_g,emission_rate", "pool response to a unit impulse"},
    CommandInfo{"export-scenario", "(json)", "canonical config of the loaded scenario"},
};

// Grid used for every -3 dB search; 500 points per decade.
FrequencyGrid bandwidth_grid() { return FrequencyGrid::logarithmic(1e-4, 1e2, 3001, true); }

FrequencyGrid grid_or(const CommandOptions &o, const std::function<FrequencyGrid()> &fallback)
{
    auto g = o.f ? *o.f : fallback();
    if (g.empty())
        fail(ErrorKind::ValidationError, "frequency grid must be non-empty");
    return g;
}

std::vector<double> list_or(const std::optional<std::vector<double>> &v, std::vector<double> fallback,
                            const char *what)
{
    auto out = v ? *v : std::move(fallback);
    require(!out.empty(), what, "non-empty");
    return out;
}

struct Sweep {
    std::vector<double> x, u;
    std::size_t size() const { return x.size() * u.size(); }
    double x_at(std::size_t i) const { return x[i / u.size()]; }
    double u_at(std::size_t i) const { return u[i % u.size()]; }
};

Sweep sweep_of(const CommandOptions &o, std::vector<double> x_default,
               std::vector<double> u_default)
{
    return {list_or(o.x, std::move(x_default), "x"), list_or(o.u, std::move(u_default), "u")};
}

// Evaluates one block of rows per sweep point (possibly concurrently) and
// emits the blocks in sweep order.
template <class Row, class Eval, class Emit>
void sweep_rows(std::size_t n, Exec exec, Eval eval, Emit emit)
{
    std::vector<std::vector<Row>> blocks(n);
    for_each_index(n, exec, [&](std::size_t i) { blocks[i] = eval(i); });
    for (const auto &block : blocks)
        for (const auto &row : block)
            emit(row);
}

Environment with_wind(const Environment &env, double u)
{
    auto e = env;
    e.wind_speed = u;
    e.validate();
    return e;
}

Position receiver_at(const Scenario &s, double x) { return {x, s.geometry.receiver.y, s.geometry.receiver.z}; }

// The signal compounds selected by --species, or every component of the signal blend.
std::vector<BlendComponent> selected_components(const Scenario &s, const CommandOptions &o)
{
    const auto &blend = s.signal_blend();
    if (o.species)
        return {blend.component(*o.species)};
    return {blend.components().begin(), blend.components().end()};
}

// Single-channel view used by end-to-end and sweep commands: the selected
// compound, or the whole blend at its mean k_eff.
PuffChannelParams signal_channel(const Scenario &s, const CommandOptions &o, double x, double u)
{
    const auto env = with_wind(s.environment, u);
    const auto rx = receiver_at(s, x);
    if (o.species) {
        const auto &c = s.signal_blend().component(*o.species);
        return PuffChannelParams::make(s.signal_blend().q0() * c.fraction, rx, env.release_height, u,
                                       env.stability, k_eff(c.species, env));
    }
    return blend_puff_channel(s.signal_blend(), env, rx);
}

FrequencyResponse signal_tx(const Scenario &s, const CommandOptions &o, const FrequencyGrid &grid)
{
    if (o.species)
        return tx_normalized_gain(s.signal_blend().component(*o.species).species, grid, o.exec);
    require_dc(grid, "blend transmitter");
    return blend_tx_response(s.signal_blend(), grid, o.exec);
}

void tx_gain(const Scenario &s, const CommandOptions &o, std::ostream &out)
{
    const auto grid = grid_or(o, [] { return FrequencyGrid::logarithmic(1e-6, 1.0, 61, true); });
    CsvWriter csv(out, {"f_hz", "species", "gain", "normalized_gain", "attenuation_db"});
    auto emit = [&](std::string_view name, const FrequencyResponse &r) {
        for (std::size_t i = 0; i < r.size(); ++i)
            csv.row({grid[i], name, r.gain[i], r.normalized_gain[i], attenuation_db(r.normalized_gain[i])});
    };
    for (const auto &c : selected_components(s, o))
        emit(c.species.name, tx_normalized_gain(c.species, grid, o.exec));
    if (!o.species)
        emit(s.signal_blend().name(), signal_tx(s, o, grid));
}

void tx_delay(const Scenario &s, const CommandOptions &o, std::ostream &out)
{
    const auto grid = grid_or(o, [] { return FrequencyGrid::logarithmic(1e-6, 1.0, 61, true); });
    CsvWriter csv(out, {"f_hz", "species", "phase_rad", "delay_s"});
    auto emit = [&](std::string_view name, const FrequencyResponse &r) {
        for (std::size_t i = 0; i < r.size(); ++i)
            csv.row({grid[i], name, r.phase[i], r.delay[i]});
    };
    for (const auto &c : selected_components(s, o))
        emit(c.species.name, tx_phase_delay(c.species, grid, o.exec));
    if (!o.species)
        emit(s.signal_blend().name(), blend_tx_response(s.signal_blend(), grid, o.exec));
}

struct NamedResponse {
    std::string name;
    double x, u, k;
    FrequencyResponse response;
};

// Per-compound puffs of the signal blend followed by the blend-mean puff,
// filtered by --species.
std::vector<std::pair<std::string, PuffChannelParams>> channel_set(const Scenario &s, const CommandOptions &o,
                                                                   double x, double u)
{
    const auto env = with_wind(s.environment, u);
    const auto rx = receiver_at(s, x);
    std::vector<std::pair<std::string, PuffChannelParams>> set;
    for (const auto &ch : species_puff_channels(s.signal_blend(), env, rx))
        if (!o.species || ch.species == *o.species)
            set.emplace_back(ch.species, ch.params);
    if (!o.species)
        set.emplace_back(s.signal_blend().name(), blend_puff_channel(s.signal_blend(), env, rx));
    return set;
}

std::vector<NamedResponse> puff_block(const Scenario &s, const CommandOptions &o, double x, double u,
                                      const FrequencyGrid &grid)
{
    std::vector<NamedResponse> block;
    for (const auto &[name, p] : channel_set(s, o, x, u))
        block.push_back({name, x, u, p.k_eff, puff_gain(p, grid, Exec::serial)});
    return block;
}

void channel_gain(const Scenario &s, const CommandOptions &o, std::ostream &out)
{
    const auto grid = grid_or(o, [] { return FrequencyGrid::linear(0.0, 0.5, 101); });
    const auto sw = sweep_of(o, {s.geometry.receiver.x}, {s.environment.wind_speed});
    CsvWriter csv(out, {"f_hz", "species", "gain_log10", "attenuation_db", "x_m", "u_mps"});
    sweep_rows<NamedResponse>(
        sw.size(), o.exec, [&](std::size_t i) { return puff_block(s, o, sw.x_at(i), sw.u_at(i), grid); },
        [&](const NamedResponse &r) {
            for (std::size_t i = 0; i < r.response.size(); ++i)
                csv.row({grid[i], r.name, r.response.log10_gain[i],
                         attenuation_db(r.response.normalized_gain[i]), r.x, r.u});
        });
}

void channel_delay(const Scenario &s, const CommandOptions &o, std::ostream &out)
{
    const auto sw = sweep_of(o, {10, 20, 50, 100, 200, 500}, {3, 4, 5, 6, 7, 20});
    CsvWriter csv(out, {"x_m", "u_mps", "species", "k_eff", "delay_s"});
    const FrequencyGrid dc({0.0});
    sweep_rows<NamedResponse>(
        sw.size(), o.exec, [&](std::size_t i) { return puff_block(s, o, sw.x_at(i), sw.u_at(i), dc); },
        [&](const NamedResponse &r) { csv.row({r.x, r.u, r.name, r.k, r.response.delay[0]}); });
}

void plume_gain(const Scenario &s, const CommandOptions &o, std::ostream &out)
{
    const auto grid = grid_or(o, [] { return FrequencyGrid::linear(0.0, 5e-6, 101); });
    const auto sw = sweep_of(o, {10, 100, 500}, {s.environment.wind_speed});
    CsvWriter csv(out, {"f_hz", "species", "gain", "normalized_gain", "attenuation_db", "x_m", "u_mps"});
    sweep_rows<NamedResponse>(
        sw.size(), o.exec,
        [&](std::size_t i) {
            std::vector<NamedResponse> block;
            for (const auto &[name, p] : channel_set(s, o, sw.x_at(i), sw.u_at(i))) {
                const PlumeChannelParams plume{p, s.simulation.delta_t, s.simulation.delta_f};
                block.push_back({name, p.x, p.u, p.k_eff, plume_response(plume, grid, Exec::serial)});
            }
            return block;
        },
        [&](const NamedResponse &r) {
            for (std::size_t i = 0; i < r.response.size(); ++i)
                csv.row({grid[i], r.name, r.response.gain[i], r.response.normalized_gain[i],
                         attenuation_db(r.response.normalized_gain[i]), r.x, r.u});
        });
}

std::vector<double> default_distances() { return {10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 110, 120, 130, 140, 150, 160, 170, 180, 190, 200}; }

void snr_sweep_cmd(const Scenario &s, const CommandOptions &o, std::ostream &out)
{
    const auto sw = sweep_of(o, default_distances(), {s.environment.wind_speed});
    const auto noises = s.noise_sources();
    require(!noises.empty(), "geometry.noise_sources", "non-empty for snr-sweep");
    CsvWriter csv(out, {"x_m", "u_mps", "noise_sources", "snr", "snr_db"});
    struct Row {
        double x, u, n, snr;
    };
    sweep_rows<Row>(
        sw.size(), o.exec,
        [&](std::size_t i) {
            const auto env = with_wind(s.environment, sw.u_at(i));
            const std::array signal{blend_source(s.signal_blend(), env)};
            const auto values = snr_cumulative(signal, noises, env, receiver_at(s, sw.x_at(i)));
            std::vector<Row> rows;
            for (std::size_t j = 0; j < values.size(); ++j)
                rows.push_back({sw.x_at(i), sw.u_at(i), static_cast<double>(j + 1), values[j]});
            return rows;
        },
        [&](const Row &r) {
            const auto n = std::to_string(static_cast<int>(r.n));
            csv.row({r.x, r.u, std::string_view(n), r.snr, to_db(r.snr)});
        });
}

double channel_bandwidth(const Scenario &s, const CommandOptions &o, double x, double u, const FrequencyGrid &grid)
{
    return bandwidth_3db(puff_gain(signal_channel(s, o, x, u), grid, Exec::serial));
}

void bandwidth_sweep(const Scenario &s, const CommandOptions &o, std::ostream &out)
{
    const auto grid = grid_or(o, bandwidth_grid);
    const auto sw = sweep_of(o, default_distances(), {3, 4, 5, 6, 7});
    CsvWriter csv(out, {"x_m", "u_mps", "bandwidth_hz"});
    struct Row {
        double x, u, b;
    };
    sweep_rows<Row>(
        sw.size(), o.exec,
        [&](std::size_t i) {
            return std::vector<Row>{{sw.x_at(i), sw.u_at(i), channel_bandwidth(s, o, sw.x_at(i), sw.u_at(i), grid)}};
        },
        [&](const Row &r) { csv.row({r.x, r.u, r.b}); });
}

void capacity_sweep(const Scenario &s, const CommandOptions &o, std::ostream &out)
{
    const auto grid = grid_or(o, bandwidth_grid);
    const auto sw = sweep_of(o, default_distances(), {s.environment.wind_speed});
    const auto noises = s.noise_sources();
    require(!noises.empty(), "geometry.noise_sources", "non-empty for capacity-sweep");
    CsvWriter csv(out, {"x_m", "u_mps", "bandwidth_hz", "snr", "capacity_bps"});
    struct Row {
        double x, u, b, snr, c;
    };
    sweep_rows<Row>(
        sw.size(), o.exec,
        [&](std::size_t i) {
            const double x = sw.x_at(i), u = sw.u_at(i);
            const auto env = with_wind(s.environment, u);
            const std::array signal{blend_source(s.signal_blend(), env)};
            const double ratio = snr_multi(signal, noises, env, receiver_at(s, x));
            const double b = channel_bandwidth(s, o, x, u, grid);
            return std::vector<Row>{{x, u, b, ratio, capacity(b, ratio)}};
        },
        [&](const Row &r) { csv.row({r.x, r.u, r.b, r.snr, r.c}); });
}

struct Cascade {
    double x, u;
    FrequencyResponse tx, channel, rx, e2e;
};

std::vector<Cascade> cascade_block(const Scenario &s, const CommandOptions &o, double x, double u,
                                   const FrequencyGrid &grid, const FrequencyResponse &tx,
                                   const FrequencyResponse &rx)
{
    auto channel = puff_gain(signal_channel(s, o, x, u), grid, Exec::serial);
    auto e2e = end_to_end_response(tx, channel, rx);
    return {Cascade{x, u, tx, std::move(channel), rx, std::move(e2e)}};
}

void e2e_gain(const Scenario &s, const CommandOptions &o, std::ostream &out)
{
    const auto grid = grid_or(o, [] { return FrequencyGrid::logarithmic(1e-6, 1.0, 61, true); });
    const auto sw = sweep_of(o, {s.geometry.receiver.x}, {s.environment.wind_speed});
    const auto tx = signal_tx(s, o, grid);
    const auto rx = uptake_response(s.simulation.leaf, grid, s.simulation.partition, o.exec);
    CsvWriter csv(out, {"f_hz", "x_m", "u_mps", "tx_gain", "channel_gain", "rx_gain", "e2e_gain", "attenuation_db"});
    sweep_rows<Cascade>(
        sw.size(), o.exec, [&](std::size_t i) { return cascade_block(s, o, sw.x_at(i), sw.u_at(i), grid, tx, rx); },
        [&](const Cascade &c) {
            for (std::size_t i = 0; i < grid.size(); ++i)
                csv.row({grid[i], c.x, c.u, c.tx.normalized_gain[i], c.channel.normalized_gain[i],
                         c.rx.normalized_gain[i], c.e2e.normalized_gain[i],
                         attenuation_db(c.e2e.normalized_gain[i])});
        });
}

void e2e_delay(const Scenario &s, const CommandOptions &o, std::ostream &out)
{
    const auto grid = grid_or(o, [] { return FrequencyGrid::logarithmic(1e-6, 1.0, 61, true); });
    const auto sw = sweep_of(o, {10, 20, 50, 100, 200}, {s.environment.wind_speed});
    const auto tx = signal_tx(s, o, grid);
    const auto rx = uptake_response(s.simulation.leaf, grid, s.simulation.partition, o.exec);
    CsvWriter csv(out, {"f_hz", "x_m", "u_mps", "tx_delay_s", "channel_delay_s", "rx_delay_s", "e2e_delay_s"});
    sweep_rows<Cascade>(
        sw.size(), o.exec, [&](std::size_t i) { return cascade_block(s, o, sw.x_at(i), sw.u_at(i), grid, tx, rx); },
        [&](const Cascade &c) {
            for (std::size_t i = 0; i < grid.size(); ++i)
                csv.row({grid[i], c.x, c.u, c.tx.delay[i], c.channel.delay[i], c.rx.delay[i], c.e2e.delay[i]});
        });
}

void rx_response(const Scenario &s, const CommandOptions &o, std::ostream &out)
{
    const auto grid = grid_or(o, [] { return FrequencyGrid::logarithmic(1e-3, 1e3, 61, true); });
    const auto r = uptake_response(s.simulation.leaf, grid, s.simulation.partition, o.exec);
    CsvWriter csv(out, {"f_hz", "gain", "normalized_gain", "phase_rad", "delay_s"});
    for (std::size_t i = 0; i < grid.size(); ++i)
        csv.row({grid[i], r.gain[i], r.normalized_gain[i], r.phase[i], r.delay[i]});
}

void tx_sim(const Scenario &s, const CommandOptions &o, std::ostream &out)
{
    const auto &blend = s.signal_blend();
    const auto &species = o.species ? blend.component(*o.species).species : blend.components().front().species;
    const auto &kin = species.require_kinetics();
    require(o.t_end > 0.0, "t_end", "> 0");
    const double dt = 0.1 / std::max({kin.k_a, kin.k_l, kin.k_g});
    const auto steps = static_cast<std::size_t>(std::ceil(o.t_end / dt));
    const std::size_t stride = std::max<std::size_t>(1, steps / 1000);
    CsvWriter csv(out, {"t_s", "s_a", "s_l", "s_g", "emission_rate"});
    simulate_pools(species, ProductionSignal::impulse(1.0), {0.0, o.t_end}, dt, [&, i = std::size_t{0}](const PoolSample &p) mutable {
        if (i++ % stride == 0 || p.t >= o.t_end)
            csv.row({p.t, p.pools.s_a, p.pools.s_l, p.pools.s_g, p.emission_rate});
    });
}

} // namespace

std::span<const CommandInfo> commands() { return kCommands; }

void run_command(std::string_view name, const Scenario &scenario, const CommandOptions &options,
                 std::ostream &out)
{
    using Handler = void (*)(const Scenario &, const CommandOptions &, std::ostream &);
    static constexpr std::array<std::pair<std::string_view, Handler>, 12> handlers{{
        {"tx-gain", tx_gain},
        {"tx-delay", tx_delay},
        {"channel-gain", channel_gain},
        {"channel-delay", channel_delay},
        {"plume-gain", plume_gain},
        {"snr-sweep", snr_sweep_cmd},
        {"bandwidth-sweep", bandwidth_sweep},
        {"capacity-sweep", capacity_sweep},
        {"e2e-gain", e2e_gain},
        {"e2e-delay", e2e_delay},
        {"rx-response", rx_response},
        {"tx-sim", tx_sim},
    }};
    if (name == "export-scenario") {
        out << to_json(scenario);
        return;
    }
    for (const auto &[key, handler] : handlers)
        if (key == name) {
            handler(scenario, options, out);
            return;
        }
    fail(ErrorKind::ValidationError, "unknown command '" + std::string(name) + "'");
}

} // namespace voclink
