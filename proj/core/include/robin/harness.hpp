// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#ifndef ROBIN_HARNESS_HPP
#define ROBIN_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace robin {

enum class Command { kernel, trace, eigs, density, verify, identity, figure };
enum class OutputFormat { csv, json };

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);

struct SweepConfig {
    Command command = Command::eigs;
    std::map<std::string, std::string> params;  // keys normalized: lower case, '-' -> '_'
    std::string output_path;                    // empty: stdout
    OutputFormat format = OutputFormat::csv;
};

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_io = 3 };

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical parameter key ("nmax" and "n-max" both become "n_max").
std::string normalize_key(const std::string& key);

// key = value lines, '#' comments. "command", "output" and "format" fill the
// corresponding fields, everything else lands in params.
SweepConfig parse_config_text(const std::string& text);
SweepConfig load_config_file(const std::string& path);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct CommandOutput {
    std::vector<Table> tables;  // first is the primary table
    bool checks_passed = true;
};

// Deterministic: identical configs give identical outputs.
CommandOutput compute_command(const SweepConfig& cfg);

std::string format_number(double v);  // %.17g
std::string format_csv(const Table& t);
std::string format_json(const CommandOutput& out, Command c);

// Computes and writes. Secondary tables go to "<stem>.<name>.csv" next to the
// output file (or follow the primary table on stdout). Returns an ExitCode.
int run_command(const SweepConfig& cfg, std::ostream& out, std::ostream& err);

enum class Figure { fig3a, fig3b, fig3c, fig3d, fig4a, fig4b, fig4c, fig4d };

std::optional<Figure> parse_figure(const std::string& name);
std::string to_string(Figure f);

// Raw partial sums on the caption ranges (L = kappa = 1). samples <= 0 uses
// the default of 1200.
CommandOutput emit_figure_data(Figure f, int samples = 0);

// ROBIN_THREADS if set and positive, else hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, n) on thread_count() threads; results must be
// written to index-addressed storage.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

struct VerifyCheck {
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::string suite;
    std::string title;
    std::vector<VerifyCheck> checks;
    double seconds = 0.0;
    std::string error;  // exception text if the suite aborted

    bool overall() const;
    // |actual - expected| <= tolerance
    void near(const std::string& name, double expected, double actual, double tolerance);
    // actual < bound
    void below(const std::string& name, double actual, double bound);
    // actual > bound
    void above(const std::string& name, double actual, double bound);
    void truth(const std::string& name, bool ok);
};

// c1..c11, one per acceptance criterion.
const std::vector<std::string>& verify_suite_names();
VerifyReport run_verify_suite(const std::string& name);
// "all" or a single suite name.
std::vector<VerifyReport> run_verify(const std::string& name);

}  // namespace robin

#endif
