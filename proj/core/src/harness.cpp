// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#include "robin/harness.hpp"

#include "robin/interval.hpp"
#include "robin/spectral.hpp"
#include "robin/transform.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

namespace robin {

namespace {

struct CommandName {
    Command c;
    const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::kernel, "kernel"},   {Command::trace, "trace"},       {Command::eigs, "eigs"},
    {Command::density, "density"}, {Command::verify, "verify"},     {Command::identity, "identity"},
    {Command::figure, "figure"},
};

struct FigureName {
    Figure f;
    const char* name;
};

constexpr FigureName kFigures[] = {
    {Figure::fig3a, "fig3a"}, {Figure::fig3b, "fig3b"}, {Figure::fig3c, "fig3c"},
    {Figure::fig3d, "fig3d"}, {Figure::fig4a, "fig4a"}, {Figure::fig4b, "fig4b"},
    {Figure::fig4c, "fig4c"}, {Figure::fig4d, "fig4d"},
};

const std::map<Command, std::set<std::string>>& allowed_keys()
{
    static const std::map<Command, std::set<std::string>> keys = {
        {Command::kernel, {"kernel", "t", "y", "kappa", "l", "x_min", "x_max", "samples", "n_max"}},
        {Command::trace, {"t_min", "t_max", "samples", "l", "kappa", "n_max"}},
        {Command::eigs, {"l", "kappa", "count"}},
        {Command::density,
         {"variant", "l", "kappa", "n_max", "omega_min", "omega_max", "samples", "mode", "sigma",
          "precision", "d"}},
        {Command::verify, {"suite"}},
        {Command::identity, {"n", "l", "kappa", "omega_min", "omega_max", "samples"}},
        {Command::figure, {"name", "samples"}},
    };
    return keys;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

class Params {
public:
    explicit Params(const SweepConfig& cfg) : p_(cfg.params) {}

    bool has(const std::string& k) const { return p_.count(k) != 0; }

    double real(const std::string& k, double def) const
    {
        auto it = p_.find(k);
        if (it == p_.end())
            return def;
        const std::string& s = it->second;
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
            throw usage_error("parameter " + k + ": not a number: '" + s + "'");
        return v;
    }

    int integer(const std::string& k, int def) const
    {
        auto it = p_.find(k);
        if (it == p_.end())
            return def;
        const std::string& s = it->second;
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw usage_error("parameter " + k + ": not an integer: '" + s + "'");
        return v;
    }

    std::string text(const std::string& k, const std::string& def) const
    {
        auto it = p_.find(k);
        return it == p_.end() ? def : it->second;
    }

private:
    const std::map<std::string, std::string>& p_;
};

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw usage_error(what);
}

std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g[i] = n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1);
    return g;
}

Table eval_grid(const std::string& name, const std::vector<std::string>& cols,
                const std::vector<double>& grid, const std::function<std::vector<double>(double)>& f)
{
    Table t{name, cols, {}};
    t.rows.resize(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const auto vals = f(grid[i]);
        std::vector<Cell> row{grid[i]};
        for (double v : vals)
            row.emplace_back(v);
        t.rows[i] = std::move(row);
    });
    return t;
}

CommandOutput cmd_kernel(const Params& p)
{
    const std::string kind = p.text("kernel", "wave");
    const double t = p.real("t", 1.0);
    const double y = p.real("y", 0.5);
    const RobinParam kp{p.real("kappa", 1.0)};
    const double L = p.real("l", 1.0);
    const int samples = p.integer("samples", 101);
    require(samples >= 2, "samples must be >= 2");
    const double x_min = p.real("x_min", kind == "interval" ? 0.01 : 0.0);
    const double x_max = p.real("x_max", kind == "interval" ? L - 0.01 : 3.0);
    require(x_max > x_min && x_min >= 0.0, "x range must be increasing and nonnegative");
    const auto grid = linspace(x_min, x_max, samples);

    CommandOutput out;
    if (kind == "wave" || kind == "interval") {
        if (kind == "interval")
            require(x_min > 0.0 && x_max < L && y > 0.0 && y < L, "interval kernel needs 0 < x, y < L");
        const int n_max = p.integer("n_max", required_nmax(t, L));
        std::vector<KernelValue> vals(grid.size());
        parallel_for(grid.size(), [&](std::size_t i) {
            vals[i] = kind == "wave" ? wave_kernel_halfline(t, grid[i], y, kp)
                                     : wave_kernel_interval(t, grid[i], y, L, kp, n_max);
        });
        Table reg{"kernel", {"x", "regular"}, {}};
        Table imp{"impulses", {"x", "tau", "weight"}, {}};
        for (std::size_t i = 0; i < grid.size(); ++i) {
            reg.rows.push_back({grid[i], vals[i].regular});
            for (const auto& d : vals[i].impulses)
                imp.rows.push_back({grid[i], d.location, d.weight});
        }
        out.tables = {reg, imp};
    } else if (kind == "heat") {
        require(t > 0.0, "heat kernel needs t > 0");
        out.tables.push_back(eval_grid("kernel", {"x", "value"}, grid, [&](double x) {
            return std::vector<double>{heat_kernel_halfline(t, x, y, kp)};
        }));
    } else if (kind == "schrodinger") {
        require(t != 0.0, "schrodinger kernel needs t != 0");
        out.tables.push_back(eval_grid("kernel", {"x", "re", "im"}, grid, [&](double x) {
            const auto v = schrodinger_kernel_halfline(t, x, y, kp);
            return std::vector<double>{v.real(), v.imag()};
        }));
    } else if (kind == "cylinder") {
        require(t > 0.0, "cylinder kernel needs t > 0");
        out.tables.push_back(eval_grid("kernel", {"x", "value"}, grid, [&](double x) {
            return std::vector<double>{cylinder_kernel_halfline(t, x, y, kp)};
        }));
    } else {
        throw usage_error("unknown kernel '" + kind + "' (wave, interval, heat, schrodinger, cylinder)");
    }
    return out;
}

CommandOutput cmd_trace(const Params& p)
{
    const double L = p.real("l", 1.0);
    const RobinParam kp{p.real("kappa", 1.0)};
    const double t_min = p.real("t_min", 0.01);
    const double t_max = p.real("t_max", 7.0);
    const int samples = p.integer("samples", 701);
    require(samples >= 2, "samples must be >= 2");
    require(t_min > 0.0 && t_max > t_min, "trace needs 0 < t_min < t_max");
    require(L > 0.0 && kp.kappa >= 0.0, "trace needs L > 0, kappa >= 0");
    const int n_max = p.integer("n_max", required_nmax(t_max, L));
    CommandOutput out;
    out.tables.push_back(eval_grid("trace", {"t", "P", "A", "B", "regular"},
                                   linspace(t_min, t_max, samples), [&](double t) {
                                       const auto d = wave_trace_interval(t, L, kp, n_max);
                                       return std::vector<double>{d.P, d.A, d.B, d.regular()};
                                   }));
    Table imp{"impulses", {"tau", "weight"}, {}};
    for (const auto& d : wave_trace_interval(t_max, L, kp, n_max).N)
        imp.rows.push_back({d.location, d.weight});
    out.tables.push_back(std::move(imp));
    return out;
}

CommandOutput cmd_eigs(const Params& p)
{
    const double L = p.real("l", 1.0);
    const RobinParam kp{p.real("kappa", 1.0)};
    const int count = p.integer("count", 4);
    require(count >= 1, "count must be >= 1");
    require(L > 0.0 && kp.kappa >= 0.0, "eigs needs L > 0, kappa >= 0");
    const EigenSpectrum s = eig_roots(L, kp, count);
    Table t{"eigs", {"k", "omega", "residual"}, {}};
    for (int k = 0; k < count; ++k)
        t.rows.push_back({std::int64_t{k + 1}, s.omegas[k], s.residuals[k]});
    CommandOutput out;
    out.tables.push_back(std::move(t));
    return out;
}

Precision parse_precision(const std::string& s)
{
    if (s == "auto")
        return Precision::automatic;
    if (s == "double")
        return Precision::double_only;
    if (s == "extended")
        return Precision::extended;
    if (s == "checked")
        return Precision::checked;
    throw usage_error("precision must be auto, double, extended or checked");
}

CommandOutput cmd_density(const Params& p)
{
    const int samples = p.integer("samples", 1200);
    require(samples >= 2, "samples must be >= 2");
    const double w0 = p.real("omega_min", 0.0);
    const double w1 = p.real("omega_max", 12.0);
    require(w0 >= 0.0 && w1 > w0, "density needs 0 <= omega_min < omega_max");
    const RobinParam kp{p.real("kappa", 1.0)};
    const auto grid = linspace(w0, w1, samples);
    CommandOutput out;

    if (p.has("d")) {
        // averaged density in dimension d, unit measure
        const int d = p.integer("d", 1);
        require(d >= 1 && d <= 3, "d must be 1, 2 or 3");
        out.tables.push_back(eval_grid("density", {"omega", "density"}, grid, [&](double w) {
            return std::vector<double>{density_av_dim(w, kp, d, 1.0)};
        }));
        return out;
    }

    const auto tag = parse_density_tag(p.text("variant", "pois_total"));
    require(tag.has_value(), "unknown density variant '" + p.text("variant", "") + "'");
    DensityVariant v{*tag, p.real("l", 1.0), kp.kappa, p.integer("n_max", 20)};
    require(v.n_max >= 1 && v.L > 0.0 && v.kappa >= 0.0, "density needs n_max >= 1, L > 0, kappa >= 0");
    const std::string mode = p.text("mode", "raw");
    const Precision prec = parse_precision(p.text("precision", "auto"));
    if (mode == "raw") {
        out.tables.push_back(eval_grid("density", {"omega", "density"}, grid, [&](double w) {
            return std::vector<double>{density_eval(v, w, prec)};
        }));
    } else if (mode == "mollified") {
        const double sigma = p.real("sigma", 0.05);
        require(sigma > 0.0, "sigma must be positive");
        out.tables.push_back(eval_grid("density", {"omega", "density"}, grid, [&](double w) {
            return std::vector<double>{mollified_density({v}, w, sigma)};
        }));
    } else {
        throw usage_error("mode must be raw or mollified");
    }
    Table ledger{"ledger", {"omega", "delta_weight"}, {}};
    ledger.rows.push_back({0.0, delta_ledger(v).explicit_delta_weight_at_zero});
    out.tables.push_back(std::move(ledger));
    return out;
}

CommandOutput cmd_identity(const Params& p)
{
    const int n = p.integer("n", 3);
    require(n >= 0 && n <= 12, "identity needs 0 <= n <= 12");
    const double w0 = p.real("omega_min", 0.1);
    const double w1 = p.real("omega_max", 20.0);
    const int samples = p.integer("samples", 200);
    require(samples >= 2 && w0 > 0.0 && w1 > w0, "identity needs 0 < omega_min < omega_max, samples >= 2");
    const auto res = termwise_identity_check(n, linspace(w0, w1, samples), p.real("l", 1.0),
                                             p.real("kappa", 1.0));
    CommandOutput out;
    Table t{"identity", {"pair", "n", "max_abs_diff"}, {}};
    for (std::size_t i = 0; i < res.size(); ++i) {
        t.rows.push_back({res[i].pair, std::int64_t{res[i].n}, res[i].max_abs_diff});
        // the last pair is the non-identity naive vs pretrace
        if (i + 1 < res.size() && !(res[i].max_abs_diff < 1e-10))
            out.checks_passed = false;
    }
    out.tables.push_back(std::move(t));
    return out;
}

CommandOutput cmd_verify(const Params& p)
{
    const std::string suite = p.text("suite", "all");
    const auto& names = verify_suite_names();
    require(suite == "all" || std::find(names.begin(), names.end(), suite) != names.end(),
            "unknown suite '" + suite + "'");
    CommandOutput out;
    Table t{"verify", {"suite", "check", "expected", "actual", "tolerance", "pass"}, {}};
    for (const auto& r : run_verify(suite)) {
        for (const auto& c : r.checks)
            t.rows.push_back({r.suite, c.name, c.expected, c.actual, c.tolerance,
                              std::int64_t{c.pass ? 1 : 0}});
        if (!r.error.empty())
            t.rows.push_back({r.suite, "error: " + r.error, 0.0, 0.0, 0.0, std::int64_t{0}});
        if (!r.overall())
            out.checks_passed = false;
    }
    out.tables.push_back(std::move(t));
    return out;
}

CommandOutput cmd_figure(const Params& p)
{
    const auto f = parse_figure(p.text("name", ""));
    require(f.has_value(), "figure name must be one of fig3a..fig3d, fig4a..fig4d");
    return emit_figure_data(*f, p.integer("samples", 0));
}

std::string csv_cell(const Cell& c)
{
    if (const auto* d = std::get_if<double>(&c))
        return format_number(*d);
    if (const auto* i = std::get_if<std::int64_t>(&c))
        return std::to_string(*i);
    const std::string& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw io_error("cannot open '" + path + "' for writing");
    f << content;
    f.flush();
    if (!f)
        throw io_error("write to '" + path + "' failed");
}

}  // namespace

std::optional<Command> parse_command(const std::string& name)
{
    for (const auto& c : kCommands)
        if (name == c.name)
            return c.c;
    return std::nullopt;
}

std::string to_string(Command c)
{
    for (const auto& e : kCommands)
        if (e.c == c)
            return e.name;
    return "unknown";
}

std::optional<Figure> parse_figure(const std::string& name)
{
    for (const auto& e : kFigures)
        if (name == e.name)
            return e.f;
    return std::nullopt;
}

std::string to_string(Figure f)
{
    for (const auto& e : kFigures)
        if (e.f == f)
            return e.name;
    return "unknown";
}

std::string normalize_key(const std::string& key)
{
    std::string k;
    for (char c : key) {
        if (c == '-')
            k += '_';
        else
            k += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (k == "nmax")
        return "n_max";
    if (k == "omegamin")
        return "omega_min";
    if (k == "omegamax")
        return "omega_max";
    return k;
}

SweepConfig parse_config_text(const std::string& text)
{
    SweepConfig cfg;
    bool have_command = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw usage_error("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = normalize_key(trim(line.substr(0, eq)));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "command") {
            const auto c = parse_command(val);
            if (!c)
                throw usage_error("config: unknown command '" + val + "'");
            cfg.command = *c;
            have_command = true;
        } else if (key == "output") {
            cfg.output_path = val;
        } else if (key == "format") {
            if (val == "csv")
                cfg.format = OutputFormat::csv;
            else if (val == "json")
                cfg.format = OutputFormat::json;
            else
                throw usage_error("config: format must be csv or json");
        } else {
            cfg.params[key] = val;
        }
    }
    if (!have_command)
        throw usage_error("config: missing 'command'");
    return cfg;
}

SweepConfig load_config_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw io_error("cannot read config '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

CommandOutput compute_command(const SweepConfig& cfg)
{
    const auto& allowed = allowed_keys().at(cfg.command);
    for (const auto& [k, v] : cfg.params)
        if (!allowed.count(k))
            throw usage_error("parameter '" + k + "' is not valid for " + to_string(cfg.command));
    const Params p(cfg);
    switch (cfg.command) {
    case Command::kernel:
        return cmd_kernel(p);
    case Command::trace:
        return cmd_trace(p);
    case Command::eigs:
        return cmd_eigs(p);
    case Command::density:
        return cmd_density(p);
    case Command::verify:
        return cmd_verify(p);
    case Command::identity:
        return cmd_identity(p);
    case Command::figure:
        return cmd_figure(p);
    }
    throw usage_error("unknown command");
}

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_csv(const Table& t)
{
    std::string s;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        s += (i ? "," : "") + t.columns[i];
    s += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            s += (i ? "," : "") + csv_cell(row[i]);
        s += '\n';
    }
    return s;
}

std::string format_json(const CommandOutput& out, Command c)
{
    nlohmann::ordered_json j;
    j["command"] = to_string(c);
    j["checks_passed"] = out.checks_passed;
    auto& tables = j["tables"];
    tables = nlohmann::ordered_json::array();
    for (const auto& t : out.tables) {
        nlohmann::ordered_json jt;
        jt["name"] = t.name;
        jt["columns"] = t.columns;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json rec;
            for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
                std::visit([&](const auto& v) { rec[t.columns[i]] = v; }, row[i]);
            rows.push_back(std::move(rec));
        }
        jt["rows"] = std::move(rows);
        tables.push_back(std::move(jt));
    }
    return j.dump(1) + "\n";
}

int run_command(const SweepConfig& cfg, std::ostream& out, std::ostream& err)
{
    CommandOutput res;
    try {
        res = compute_command(cfg);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const io_error& e) {
        err << "i/o error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_check_failed;
    }

    try {
        if (cfg.format == OutputFormat::json) {
            const std::string doc = format_json(res, cfg.command);
            if (cfg.output_path.empty())
                out << doc;
            else
                write_file(cfg.output_path, doc);
        } else if (cfg.output_path.empty()) {
            for (std::size_t i = 0; i < res.tables.size(); ++i) {
                if (i > 0)
                    out << "\n# " << res.tables[i].name << "\n";
                out << format_csv(res.tables[i]);
            }
        } else {
            namespace fs = std::filesystem;
            const fs::path primary(cfg.output_path);
            write_file(cfg.output_path, format_csv(res.tables.front()));
            for (std::size_t i = 1; i < res.tables.size(); ++i) {
                fs::path side = primary.parent_path() /
                                (primary.stem().string() + "." + res.tables[i].name + ".csv");
                write_file(side.string(), format_csv(res.tables[i]));
            }
        }
        if (!out)
            throw io_error("write to standard output failed");
    } catch (const io_error& e) {
        err << "i/o error: " << e.what() << "\n";
        return exit_io;
    }
    return res.checks_passed ? exit_ok : exit_check_failed;
}

CommandOutput emit_figure_data(Figure f, int samples)
{
    const int n = samples > 0 ? samples : 1200;
    const double L = 1.0, k = 1.0;
    auto var = [&](DensityTag t, int n_max) { return DensityVariant{t, L, k, n_max}; };
    std::vector<DensityVariant> vs;
    double w0 = 1.0, w1 = 12.0;
    switch (f) {
    case Figure::fig3a:
        vs = {var(DensityTag::pois_total, 20)};
        break;
    case Figure::fig3b:
        vs = {var(DensityTag::pois_per, 20)};
        break;
    case Figure::fig3c:
        vs = {var(DensityTag::pois_total, 4)};
        w0 = 50.0;
        w1 = 60.0;
        break;
    case Figure::fig3d:
        vs = {var(DensityTag::pois_total, 20)};
        w0 = 50.0;
        w1 = 60.0;
        break;
    case Figure::fig4a:
        vs = {var(DensityTag::pois_total, 20)};
        w0 = 0.0;
        w1 = 3.0;
        break;
    case Figure::fig4b:
        w0 = 4.0 / n;  // open at 0
        w1 = 4.0;
        break;
    case Figure::fig4c:
        vs = {var(DensityTag::rho_N, 20), var(DensityTag::rho_per, 20),
              var(DensityTag::bou_pretrace, 20)};
        w0 = 0.0;
        w1 = 3.0;
        break;
    case Figure::fig4d:
        vs = {var(DensityTag::rho_N, 20), var(DensityTag::rho_per, 20),
              var(DensityTag::bou_naive, 20)};
        w0 = 0.0;
        w1 = 3.0;
        break;
    }
    const auto grid = linspace(w0, w1, n);
    CommandOutput out;
    if (f == Figure::fig4b) {
        const auto a = var(DensityTag::rho_bdry, 6), b = var(DensityTag::pois_bdry, 6);
        out.tables.push_back(eval_grid(to_string(f), {"omega", "difference"}, grid, [&](double w) {
            return std::vector<double>{density_eval(a, w, Precision::extended) -
                                       density_eval(b, w, Precision::extended)};
        }));
    } else {
        out.tables.push_back(eval_grid(to_string(f), {"omega", "density"}, grid, [&](double w) {
            return std::vector<double>{density_eval_sum(vs, w)};
        }));
    }
    return out;
}

int thread_count()
{
    if (const char* s = std::getenv("ROBIN_THREADS")) {
        const int v = std::atoi(s);
        if (v > 0)
            return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body)
{
    const std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t i = next++; i < n && !failed; i = next++) {
            try {
                body(i);
            } catch (...) {
                if (!failed.exchange(true))
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nt; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

bool VerifyReport::overall() const
{
    if (!error.empty() || checks.empty())
        return false;
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

void VerifyReport::near(const std::string& name, double expected, double actual, double tolerance)
{
    checks.push_back({name, expected, actual, tolerance, std::abs(actual - expected) <= tolerance});
}

void VerifyReport::below(const std::string& name, double actual, double bound)
{
    checks.push_back({name, bound, actual, 0.0, actual < bound});
}

void VerifyReport::above(const std::string& name, double actual, double bound)
{
    checks.push_back({name, bound, actual, 0.0, actual > bound});
}

void VerifyReport::truth(const std::string& name, bool ok)
{
    checks.push_back({name, 1.0, ok ? 1.0 : 0.0, 0.0, ok});
}

}  // namespace robin
