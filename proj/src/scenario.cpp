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

#include "voclink/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "voclink/atmosphere.hpp"
#include "voclink/errors.hpp"

namespace voclink {

namespace {

using json = nlohmann::json;
using ordered = nlohmann::ordered_json;

// Field-by-field reader over one JSON object; remembers which keys were
// consumed so leftovers can be reported as unknown.
class ObjectReader {
public:
    ObjectReader(const json &node, std::string path) : node_(node), path_(std::move(path))
    {
        if (!node_.is_object())
            fail(ErrorKind::ParseError, path_ + ": expected an object");
    }

    bool has(const std::string &key) const { return node_.contains(key) && !node_.at(key).is_null(); }

    const json &at(const std::string &key)
    {
        seen_.insert(key);
        if (!node_.contains(key))
            fail(ErrorKind::ParseError, field(key) + ": missing required field");
        return node_.at(key);
    }

    double number(const std::string &key)
    {
        const auto &v = at(key);
        if (!v.is_number())
            fail(ErrorKind::ParseError, field(key) + ": expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d))
            fail(ErrorKind::ParseError, field(key) + ": expected a finite number");
        return d;
    }

    double number(const std::string &key, double fallback)
    {
        seen_.insert(key);
        return node_.contains(key) ? number(key) : fallback;
    }

    std::optional<double> optional_number(const std::string &key)
    {
        seen_.insert(key);
        if (!has(key))
            return std::nullopt;
        return number(key);
    }

    std::string string(const std::string &key)
    {
        const auto &v = at(key);
        if (!v.is_string())
            fail(ErrorKind::ParseError, field(key) + ": expected a string");
        return v.get<std::string>();
    }

    std::string string(const std::string &key, std::string fallback)
    {
        seen_.insert(key);
        return node_.contains(key) ? string(key) : fallback;
    }

    const json &array(const std::string &key)
    {
        const auto &v = at(key);
        if (!v.is_array())
            fail(ErrorKind::ParseError, field(key) + ": expected an array");
        return v;
    }

    std::optional<ObjectReader> child(const std::string &key)
    {
        seen_.insert(key);
        if (!node_.contains(key))
            return std::nullopt;
        return ObjectReader(node_.at(key), field(key));
    }

    void finish() const
    {
        for (const auto &item : node_.items())
            if (!seen_.count(item.key()))
                fail(ErrorKind::ValidationError, field(item.key()) + ": unknown key");
    }

    std::string field(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }
    const std::string &path() const { return path_; }

private:
    const json &node_;
    std::string path_;
    std::set<std::string> seen_;
};

VocSpecies read_species(const json &node, std::size_t index)
{
    ObjectReader r(node, "species[" + std::to_string(index) + "]");
    VocSpecies s;
    s.name = r.string("name");
    const bool any_kinetics = r.has("k_a") || r.has("k_l") || r.has("k_g") || r.has("eta");
    if (any_kinetics) {
        const std::string owner = "species." + s.name;
        for (const char *key : {"k_a", "k_l", "k_g", "eta"})
            require(r.has(key), owner + "." + key, "present when any pool kinetics are given");
        s.kinetics = Kinetics{r.number("k_a"), r.number("k_l"), r.number("k_g"), r.number("eta")};
    } else {
        for (const char *key : {"k_a", "k_l", "k_g", "eta"})
            r.optional_number(key);
    }
    s.oxidant = OxidantRates{r.number("k_oh"), r.number("k_no3"), r.number("k_o3")};
    r.finish();
    s.validate();
    return s;
}

Blend read_blend(const json &node, std::size_t index, const std::vector<VocSpecies> &species)
{
    ObjectReader r(node, "blends[" + std::to_string(index) + "]");
    const auto name = r.string("name");
    const double q0 = r.number("q0");
    const auto &list = r.array("components");
    std::vector<std::pair<VocSpecies, double>> parts;
    for (std::size_t i = 0; i < list.size(); ++i) {
        ObjectReader c(list[i], r.field("components[" + std::to_string(i) + "]"));
        const auto species_name = c.string("species");
        const double percent = c.number("percent");
        c.finish();
        parts.emplace_back(find_species(species, species_name), percent);
    }
    r.finish();
    return Blend(name, q0, std::move(parts));
}

Environment read_environment(ObjectReader r)
{
    Environment env;
    env.wind_speed = r.number("wind_speed", env.wind_speed);
    env.stability = parse_stability_class(r.string("stability_class", std::string(1, to_char(env.stability))));
    env.c_oh = r.number("c_oh", env.c_oh);
    env.c_o3 = r.number("c_o3", env.c_o3);
    env.c_no3 = r.number("c_no3", env.c_no3);
    env.release_height = r.number("release_height", env.release_height);
    env.t_start = r.number("t_start", env.t_start);
    env.t_end = r.number("t_end", env.t_end);
    env.sample_step = r.number("sample_step", env.sample_step);
    r.finish();
    return env;
}

LinkGeometry read_geometry(ObjectReader r)
{
    LinkGeometry g;
    g.signal_blend = r.string("signal_blend");
    if (auto rx = r.child("receiver")) {
        g.receiver.x = rx->number("x");
        g.receiver.y = rx->number("y", 0.0);
        g.receiver.z = rx->number("z", 0.0);
        rx->finish();
    }
    if (r.has("noise_sources")) {
        const auto &list = r.array("noise_sources");
        for (std::size_t i = 0; i < list.size(); ++i) {
            ObjectReader n(list[i], r.field("noise_sources[" + std::to_string(i) + "]"));
            NoiseSourceSpec spec;
            spec.x0 = n.number("x0");
            spec.y0 = n.number("y0");
            spec.blend = n.string("blend");
            spec.q_n = n.optional_number("q_n");
            spec.k_n = n.optional_number("k_n");
            n.finish();
            g.noise_sources.push_back(std::move(spec));
        }
    } else {
        r.child("noise_sources");
    }
    r.finish();
    return g;
}

PartitionMode parse_partition(const std::string &text)
{
    if (text == "multiply")
        return PartitionMode::multiply;
    if (text == "divide")
        return PartitionMode::divide;
    fail(ErrorKind::ValidationError, "simulation.partition must be \"multiply\" or \"divide\"");
}

const char *to_string(PartitionMode mode) { return mode == PartitionMode::multiply ? "multiply" : "divide"; }

SimulationSettings read_simulation(ObjectReader r)
{
    SimulationSettings s;
    s.delta_t = r.number("delta_t", s.delta_t);
    s.delta_f = r.optional_number("delta_f");
    s.partition = parse_partition(r.string("partition", "multiply"));
    if (auto leaf = r.child("leaf")) {
        s.leaf.area = leaf->number("area", s.leaf.area);
        s.leaf.conductance = leaf->number("conductance", s.leaf.conductance);
        s.leaf.volume = leaf->number("volume", s.leaf.volume);
        s.leaf.k_la = leaf->number("k_la", s.leaf.k_la);
        s.leaf.growth_rate = leaf->number("growth_rate", s.leaf.growth_rate);
        leaf->finish();
    }
    r.finish();
    return s;
}

std::string position_of(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

} // namespace

const Blend &Scenario::blend(std::string_view name) const
{
    for (const auto &b : blends)
        if (b.name() == name)
            return b;
    fail(ErrorKind::ValidationError, "blend '" + std::string(name) + "' is not defined");
}

PointSource Scenario::signal_source() const { return blend_source(signal_blend(), environment); }

std::vector<PointSource> Scenario::noise_sources() const
{
    std::vector<PointSource> out;
    out.reserve(geometry.noise_sources.size());
    for (const auto &spec : geometry.noise_sources) {
        auto src = blend_source(blend(spec.blend), environment, spec.x0, spec.y0, spec.q_n);
        if (spec.k_n)
            src.k = *spec.k_n;
        out.push_back(src);
    }
    return out;
}

void Scenario::validate() const
{
    for (const auto &s : species)
        s.validate();
    for (std::size_t i = 0; i < species.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            require(species[i].name != species[j].name, "species." + species[i].name, "unique name");
    for (std::size_t i = 0; i < blends.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            require(blends[i].name() != blends[j].name(), "blends." + blends[i].name(), "unique name");
    environment.validate();
    signal_blend();
    require(geometry.receiver.x > 0.0, "geometry.receiver.x", "> 0");
    require(geometry.receiver.z >= 0.0, "geometry.receiver.z", ">= 0");
    for (const auto &n : geometry.noise_sources) {
        blend(n.blend);
        if (n.q_n)
            require(*n.q_n >= 0.0, "geometry.noise_sources.q_n", ">= 0");
        if (n.k_n)
            require(*n.k_n >= 0.0, "geometry.noise_sources.k_n", ">= 0");
    }
    simulation.leaf.validate();
    require(simulation.delta_t > 0.0, "simulation.delta_t", "> 0");
    if (simulation.delta_f)
        require(*simulation.delta_f > 0.0, "simulation.delta_f", "> 0");
}

Scenario builtin_scenario()
{
    auto ilex = builtin_q_ilex();
    auto pinea = builtin_pinus_pinea();
    Scenario s;
    s.species = ilex.species;
    for (const auto &sp : pinea.species) {
        bool shared = false;
        for (const auto &existing : s.species)
            shared = shared || existing.name == sp.name;
        if (!shared)
            s.species.push_back(sp);
    }
    s.blends = {ilex.blend, pinea.blend};
    s.environment = reference_environment();
    s.geometry.signal_blend = ilex.blend.name();
    for (const auto &offset : reference_noise_offsets())
        s.geometry.noise_sources.push_back({offset.x, offset.y, pinea.blend.name(), std::nullopt, std::nullopt});
    s.validate();
    return s;
}

Scenario parse_scenario(std::string_view text)
{
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        fail(ErrorKind::ParseError, "malformed config at " + position_of(text, e.byte == 0 ? 0 : e.byte - 1));
    }

    ObjectReader top(root, "");
    Scenario s;
    const auto &species = top.array("species");
    for (std::size_t i = 0; i < species.size(); ++i)
        s.species.push_back(read_species(species[i], i));
    const auto &blends = top.array("blends");
    for (std::size_t i = 0; i < blends.size(); ++i)
        s.blends.push_back(read_blend(blends[i], i, s.species));
    if (auto env = top.child("environment"))
        s.environment = read_environment(std::move(*env));
    auto geometry = top.child("geometry");
    if (!geometry)
        fail(ErrorKind::ParseError, "geometry: missing required section");
    s.geometry = read_geometry(std::move(*geometry));
    if (auto sim = top.child("simulation"))
        s.simulation = read_simulation(std::move(*sim));
    top.finish();
    s.validate();
    return s;
}

std::filesystem::path resolve_fixture(const std::filesystem::path &path)
{
    if (std::filesystem::exists(path) || path.is_absolute())
        return path;
    if (const char *dir = std::getenv("VOCLINK_FIXTURE_DIR")) {
        const auto candidate = std::filesystem::path(dir) / path;
        if (std::filesystem::exists(candidate))
            return candidate;
    }
    return path;
}

Scenario load_scenario(const std::filesystem::path &path)
{
    const auto resolved = resolve_fixture(path);
    std::ifstream in(resolved, std::ios::binary);
    if (!in)
        fail(ErrorKind::ParseError, "cannot open config '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario(buf.str());
    } catch (const Error &e) {
        fail(e.kind(), resolved.string() + ": " + e.detail());
    }
}

std::string to_json(const Scenario &s)
{
    ordered root;
    auto &species = root["species"] = ordered::array();
    for (const auto &sp : s.species) {
        ordered node;
        node["name"] = sp.name;
        if (sp.kinetics) {
            node["k_a"] = sp.kinetics->k_a;
            node["k_l"] = sp.kinetics->k_l;
            node["k_g"] = sp.kinetics->k_g;
            node["eta"] = sp.kinetics->eta;
        }
        node["k_oh"] = sp.oxidant.k_oh;
        node["k_no3"] = sp.oxidant.k_no3;
        node["k_o3"] = sp.oxidant.k_o3;
        species.push_back(std::move(node));
    }
    auto &blends = root["blends"] = ordered::array();
    for (const auto &b : s.blends) {
        ordered node;
        node["name"] = b.name();
        node["q0"] = b.q0();
        auto &comps = node["components"] = ordered::array();
        for (const auto &c : b.components())
            comps.push_back(ordered{{"species", c.species.name}, {"percent", c.percent}});
        blends.push_back(std::move(node));
    }
    const auto &env = s.environment;
    root["environment"] = ordered{{"wind_speed", env.wind_speed},
                                  {"stability_class", std::string(1, to_char(env.stability))},
                                  {"c_oh", env.c_oh},
                                  {"c_o3", env.c_o3},
                                  {"c_no3", env.c_no3},
                                  {"release_height", env.release_height},
                                  {"t_start", env.t_start},
                                  {"t_end", env.t_end},
                                  {"sample_step", env.sample_step}};
    ordered geometry;
    geometry["signal_blend"] = s.geometry.signal_blend;
    geometry["receiver"] = ordered{{"x", s.geometry.receiver.x}, {"y", s.geometry.receiver.y},
                                   {"z", s.geometry.receiver.z}};
    auto &noise = geometry["noise_sources"] = ordered::array();
    for (const auto &n : s.geometry.noise_sources) {
        ordered node{{"x0", n.x0}, {"y0", n.y0}, {"blend", n.blend}};
        if (n.q_n)
            node["q_n"] = *n.q_n;
        if (n.k_n)
            node["k_n"] = *n.k_n;
        noise.push_back(std::move(node));
    }
    root["geometry"] = std::move(geometry);
    ordered sim;
    sim["delta_t"] = s.simulation.delta_t;
    if (s.simulation.delta_f)
        sim["delta_f"] = *s.simulation.delta_f;
    sim["partition"] = to_string(s.simulation.partition);
    const auto &leaf = s.simulation.leaf;
    sim["leaf"] = ordered{{"area", leaf.area},
                          {"conductance", leaf.conductance},
                          {"volume", leaf.volume},
                          {"k_la", leaf.k_la},
                          {"growth_rate", leaf.growth_rate}};
    root["simulation"] = std::move(sim);
    return root.dump(2) + "\n";
}

} // namespace voclink
