// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

// robin: sweeps, traces, eigenvalues, densities and verification suites.

#include "robin/harness.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

namespace {

struct Flag {
    const char* name;  // CLI spelling
    const char* help;
};

// Flags per subcommand; values are passed through as strings and validated
// by the harness.
const std::map<robin::Command, std::vector<Flag>>& flag_table()
{
    using robin::Command;
    static const std::map<Command, std::vector<Flag>> t = {
        {Command::kernel,
         {{"--kernel", "wave | interval | heat | schrodinger | cylinder"},
          {"--t", "time"},
          {"--y", "source point"},
          {"--kappa", "Robin parameter"},
          {"--L", "interval length (interval kernel)"},
          {"--x-min", "first x"},
          {"--x-max", "last x"},
          {"--samples", "number of x samples"},
          {"--nmax", "series cutoff (interval kernel)"}}},
        {Command::trace,
         {{"--t-min", "first t"},
          {"--t-max", "last t"},
          {"--samples", "number of t samples"},
          {"--L", "interval length"},
          {"--kappa", "Robin parameter"},
          {"--nmax", "series cutoff"}}},
        {Command::eigs,
         {{"--L", "interval length"}, {"--kappa", "Robin parameter"}, {"--count", "number of roots"}}},
        {Command::density,
         {{"--variant", "density series tag (pois_total, rho_per, ...)"},
          {"--L", "interval length"},
          {"--kappa", "Robin parameter"},
          {"--nmax", "partial-sum cutoff"},
          {"--omega-min", "first omega"},
          {"--omega-max", "last omega"},
          {"--samples", "number of omega samples"},
          {"--mode", "raw | mollified"},
          {"--sigma", "Gaussian width for mollified mode"},
          {"--precision", "auto | double | extended | checked"},
          {"--d", "averaged density in dimension 1, 2 or 3 (ignores --variant)"}}},
        {Command::verify, {{"--suite", "c1..c11 or all"}}},
        {Command::identity,
         {{"--n", "term index (<= 12)"},
          {"--L", "interval length"},
          {"--kappa", "Robin parameter"},
          {"--omega-min", "first omega"},
          {"--omega-max", "last omega"},
          {"--samples", "grid size"}}},
        {Command::figure, {{"--name", "fig3a..fig3d, fig4a..fig4d"}, {"--samples", "grid size"}}},
    };
    return t;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Robin boundary kernels, traces and spectral densities"};
    app.require_subcommand(0, 1);

    std::string config_path, output_path, format;
    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("-o,--output", output_path, "output file (default stdout)");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    std::map<std::string, std::string> values;
    std::map<CLI::App*, robin::Command> subs;
    for (const auto& [cmd, flags] : flag_table()) {
        auto* sub = app.add_subcommand(robin::to_string(cmd));
        subs[sub] = cmd;
        for (const auto& f : flags) {
            const std::string key = robin::normalize_key(std::string(f.name).substr(2));
            sub->add_option_function<std::string>(
                f.name, [&values, key](const std::string& v) { values[key] = v; }, f.help);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return robin::exit_usage;
    }

    robin::SweepConfig cfg;
    bool have_command = false;
    try {
        if (!config_path.empty()) {
            cfg = robin::load_config_file(config_path);
            have_command = true;
        }
    } catch (const robin::io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return robin::exit_io;
    } catch (const robin::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return robin::exit_usage;
    }

    for (const auto& [sub, cmd] : subs) {
        if (!sub->parsed())
            continue;
        if (have_command && cfg.command != cmd) {
            std::cerr << "usage error: subcommand differs from the config file command\n";
            return robin::exit_usage;
        }
        cfg.command = cmd;
        have_command = true;
    }
    if (!have_command) {
        std::cerr << app.help();
        return robin::exit_usage;
    }
    for (const auto& [k, v] : values)
        cfg.params[k] = v;
    if (!output_path.empty())
        cfg.output_path = output_path;
    if (format == "json")
        cfg.format = robin::OutputFormat::json;
    else if (format == "csv")
        cfg.format = robin::OutputFormat::csv;

    return robin::run_command(cfg, std::cout, std::cerr);
}
