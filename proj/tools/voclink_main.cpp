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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "voclink/commands.hpp"
#include "voclink/errors.hpp"
#include "voclink/scenario.hpp"
#include "voclink/sweep.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

std::string command_help()
{
    std::ostringstream out;
    out << "Commands:\n";
    for (const auto &c : voclink::commands())
        out << "  " << c.name << "  " << c.summary << "\n      columns: " << c.columns << "\n";
    return out.str();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"VOC interplant link model: frequency responses, SNR, bandwidth and capacity as CSV"};
    app.footer(command_help());

    std::string command;
    std::string scenario_path;
    std::string x_spec, u_spec, f_spec, f_log_spec, output;
    std::string species;
    double t_end = 600.0;
    bool serial = false;

    app.add_option("command", command, "Command to run")->required();
    app.add_option("--scenario", scenario_path, "JSON config (default: built-in Q. ilex scenario)");
    app.add_option("--x", x_spec, "Receiver distances, m: a,b,c or start:step:end");
    app.add_option("--u", u_spec, "Wind speeds, m/s: a,b,c or start:step:end");
    auto *f_opt = app.add_option("--f", f_spec, "Frequencies, Hz: a,b,c or start:step:end");
    app.add_option("--f-log", f_log_spec, "Log frequency grid lo:hi:n, preceded by 0 Hz")->excludes(f_opt);
    app.add_option("--species", species, "Restrict to one compound of the signal blend");
    app.add_option("--t-end", t_end, "tx-sim horizon, s");
    app.add_option("-o,--output", output, "Write CSV to this file instead of stdout");
    app.add_flag("--serial", serial, "Use the serial reference kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        voclink::CommandOptions options;
        if (app.count("--x"))
            options.x = voclink::parse_sweep(x_spec);
        if (app.count("--u"))
            options.u = voclink::parse_sweep(u_spec);
        if (app.count("--f"))
            options.f = voclink::FrequencyGrid(voclink::parse_sweep(f_spec));
        if (app.count("--f-log"))
            options.f = voclink::parse_log_grid(f_log_spec);
        if (app.count("--species"))
            options.species = species;
        options.t_end = t_end;
        options.exec = serial ? voclink::Exec::serial : voclink::Exec::parallel;

        const auto scenario =
            scenario_path.empty() ? voclink::builtin_scenario() : voclink::load_scenario(scenario_path);

        // Render fully before touching the output file so failures leave no partial CSV.
        std::ostringstream csv;
        voclink::run_command(command, scenario, options, csv);
        if (output.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream file(output, std::ios::binary);
            if (!file)
                voclink::fail(voclink::ErrorKind::ValidationError, "cannot write '" + output + "'");
            file << csv.str();
        }
        return 0;
    } catch (const voclink::Error &e) {
        std::cerr << "voclink: " << e.what() << "\n";
        return voclink::is_numeric_failure(e.kind()) ? kExitNumeric : kExitValidation;
    } catch (const std::exception &e) {
        std::cerr << "voclink: " << e.what() << "\n";
        return 1;
    }
}
