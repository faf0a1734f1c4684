// SPDX-License-Identifier: Apache-2.0
//
// rissec - secrecy analysis of FC-RIS and UAV assisted multiuser downlinks
// Copyright (C) 2026 The rissec Authors
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

#include "rissec/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "rissec/analytic.hpp"
#include "rissec/errors.hpp"
#include "rissec/parallel.hpp"

namespace rissec {

namespace {

using Kind = ConfigError::Kind;
namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& schema()
{
    static const std::map<std::string, std::set<std::string>> s = {
        {"geometry", {"r_br", "h_br", "d_rn", "users", "r_max", "eve_center", "eve_center_altitude"}},
        {"environment", {"a2", "b2", "alpha_zenith", "alpha_ground", "alpha_rn", "alpha_be", "g0_db", "gamma_b_db"}},
        {"fading", {"m1", "m2", "elements"}},
        {"experiment", {"name", "grid", "schemes", "evaluators", "trials", "seed"}},
    };
    return s;
}

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// Inline comments start at ';' or '#'.
std::string strip_comment(const std::string& s)
{
    return s.substr(0, s.find_first_of(";#"));
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(trim(item));
    return out;
}

double to_double(const std::string& key, const std::string& text)
{
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty())
        throw ConfigError(Kind::Schema, "'" + key + "': expected a number, got '" + text + "'");
    return v;
}

long long to_integer(const std::string& key, const std::string& text)
{
    long long v = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty())
        throw ConfigError(Kind::Schema, "'" + key + "': expected an integer, got '" + text + "'");
    return v;
}

std::uint64_t to_unsigned(const std::string& key, const std::string& text)
{
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty())
        throw ConfigError(Kind::Schema, "'" + key + "': expected a non-negative integer, got '" + text + "'");
    return v;
}

int to_int(const std::string& key, const std::string& text)
{
    const long long v = to_integer(key, text);
    if (v < -1000000000LL || v > 1000000000LL)
        throw ConfigError(Kind::OutOfRange, "'" + key + "' out of range");
    return static_cast<int>(v);
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string point_label(ExperimentKind kind, const std::string& var, double value)
{
    if (kind == ExperimentKind::Single)
        return {};
    return " at " + var + "=" + format_number(value);
}

} // namespace

std::string_view to_string(ExperimentKind kind)
{
    switch (kind) {
    case ExperimentKind::Fig2:
        return "fig2";
    case ExperimentKind::Fig3:
        return "fig3";
    case ExperimentKind::Fig4:
        return "fig4";
    case ExperimentKind::Single:
        return "single";
    }
    return "single";
}

ExperimentKind parse_experiment_kind(std::string_view name)
{
    for (ExperimentKind k : {ExperimentKind::Fig2, ExperimentKind::Fig3, ExperimentKind::Fig4, ExperimentKind::Single})
        if (to_string(k) == name)
            return k;
    throw ConfigError(Kind::Schema, "unknown experiment '" + std::string(name) + "'");
}

std::vector<double> default_grid(ExperimentKind kind)
{
    switch (kind) {
    case ExperimentKind::Fig2:
        return {100.0, 200.0, 300.0, 400.0, 500.0};
    case ExperimentKind::Fig3:
        return {4.0, 8.0, 16.0, 32.0};
    case ExperimentKind::Fig4: {
        std::vector<double> g;
        for (int h = 50; h <= 1000; h += 50)
            g.push_back(h);
        return g;
    }
    case ExperimentKind::Single:
        return {0.0};
    }
    return {0.0};
}

std::string_view sweep_variable(ExperimentKind kind)
{
    switch (kind) {
    case ExperimentKind::Fig2:
        return "r_max";
    case ExperimentKind::Fig3:
        return "elements";
    case ExperimentKind::Fig4:
        return "h_br";
    case ExperimentKind::Single:
        return "none";
    }
    return "none";
}

void apply_sweep(ScenarioConfig& config, ExperimentKind kind, double value)
{
    switch (kind) {
    case ExperimentKind::Fig2:
        config.geometry.r_max = value;
        break;
    case ExperimentKind::Fig3:
        config.fading.L = static_cast<int>(value);
        break;
    case ExperimentKind::Fig4:
        config.geometry.h_br = value;
        break;
    case ExperimentKind::Single:
        break;
    }
}

LoadedConfig parse_config(std::istream& in)
{
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(Kind::Schema, std::string("malformed config: ") + e.message() + " (line " +
                                            std::to_string(e.line()) + ")");
    }
    for (const auto& [section, body] : tree) {
        const auto it = schema().find(section);
        if (it == schema().end()) {
            if (!body.data().empty())
                throw ConfigError(Kind::Schema, "key '" + section + "' outside of a section");
            throw ConfigError(Kind::Schema, "unknown section [" + section + "]");
        }
        for (const auto& kv : body)
            if (!it->second.count(kv.first))
                throw ConfigError(Kind::Schema, "unknown key '" + kv.first + "' in [" + section + "]");
    }

    LoadedConfig cfg;
    ScenarioConfig& sc = cfg.scenario;
    ExperimentSpec& ex = cfg.experiment;
    auto get = [&](const std::string& path) -> std::optional<std::string> {
        if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '.')))
            return trim(strip_comment(*v));
        return std::nullopt;
    };

    if (auto v = get("geometry.r_br"))
        sc.geometry.r_br = to_double("r_br", *v);
    if (auto v = get("geometry.h_br"))
        sc.geometry.h_br = to_double("h_br", *v);
    if (auto v = get("geometry.r_max"))
        sc.geometry.r_max = to_double("r_max", *v);
    std::vector<double> d_rn;
    if (auto v = get("geometry.d_rn"))
        for (const auto& item : split_list(*v))
            d_rn.push_back(to_double("d_rn", item));
    int users = static_cast<int>(sc.geometry.num_users());
    const auto users_text = get("geometry.users");
    if (users_text) {
        users = to_int("users", *users_text);
        if (users < 1)
            throw ConfigError(Kind::OutOfRange, "'users' must be at least 1");
    }
    if (d_rn.empty())
        sc.geometry.d_rn.assign(users, sc.geometry.d_rn.front());
    else if (d_rn.size() == 1)
        sc.geometry.d_rn.assign(users, d_rn.front());
    else if (!users_text || static_cast<int>(d_rn.size()) == users)
        sc.geometry.d_rn = d_rn;
    else
        throw ConfigError(Kind::Schema, "'d_rn' lists " + std::to_string(d_rn.size()) + " distances but users = " +
                                            std::to_string(users));
    if (auto v = get("geometry.eve_center")) {
        if (*v == "bs")
            sc.eve_center = EveCenter::Bs;
        else if (*v == "fixed")
            sc.eve_center = EveCenter::Fixed;
        else
            throw ConfigError(Kind::Schema, "'eve_center' must be bs or fixed");
    }
    sc.eve_center_altitude = sc.geometry.h_br;
    if (auto v = get("geometry.eve_center_altitude"))
        sc.eve_center_altitude = to_double("eve_center_altitude", *v);

    if (auto v = get("environment.a2"))
        sc.air.a2 = to_double("a2", *v);
    if (auto v = get("environment.b2"))
        sc.air.b2 = to_double("b2", *v);
    if (auto v = get("environment.alpha_zenith"))
        sc.air.alpha_zenith = to_double("alpha_zenith", *v);
    if (auto v = get("environment.alpha_ground"))
        sc.air.alpha_ground = to_double("alpha_ground", *v);
    sc.air.alpha_rn = sc.air.alpha_ground;
    if (auto v = get("environment.alpha_rn"))
        sc.air.alpha_rn = to_double("alpha_rn", *v);
    if (auto v = get("environment.alpha_be"))
        sc.air.alpha_be = to_double("alpha_be", *v);
    if (auto v = get("environment.g0_db"))
        sc.air.g0 = db_to_linear(to_double("g0_db", *v));
    if (auto v = get("environment.gamma_b_db"))
        sc.gamma_b_db = to_double("gamma_b_db", *v);

    if (auto v = get("fading.m1"))
        sc.fading.m1 = to_int("m1", *v);
    if (auto v = get("fading.m2"))
        sc.fading.m2 = to_int("m2", *v);
    if (auto v = get("fading.elements"))
        sc.fading.L = to_int("elements", *v);

    if (auto v = get("experiment.name"))
        ex.kind = parse_experiment_kind(*v);
    if (auto v = get("experiment.grid"))
        for (const auto& item : split_list(*v))
            ex.grid.push_back(to_double("grid", item));
    if (auto v = get("experiment.schemes")) {
        ex.schemes.clear();
        for (const auto& item : split_list(*v)) {
            try {
                ex.schemes.push_back(parse_scheme(item));
            } catch (const DomainError& e) {
                throw ConfigError(Kind::Schema, e.what());
            }
        }
    }
    if (auto v = get("experiment.evaluators")) {
        ex.monte_carlo = false;
        ex.analytic = false;
        for (const auto& item : split_list(*v)) {
            if (item == "mc")
                ex.monte_carlo = true;
            else if (item == "analytic")
                ex.analytic = true;
            else
                throw ConfigError(Kind::Schema, "unknown evaluator '" + item + "'");
        }
    }
    if (auto v = get("experiment.trials"))
        ex.trials = to_unsigned("trials", *v);
    if (auto v = get("experiment.seed"))
        ex.seed = to_unsigned("seed", *v);

    if (ex.schemes.empty())
        throw ConfigError(Kind::Schema, "'schemes' must list at least one scheme");
    if (!ex.monte_carlo && !ex.analytic)
        throw ConfigError(Kind::Schema, "'evaluators' must list at least one evaluator");
    if (ex.trials == 0)
        throw ConfigError(Kind::OutOfRange, "'trials' must be at least 1");
    try {
        sc.validate();
        for (double g : ex.grid.empty() ? default_grid(ex.kind) : ex.grid) {
            ScenarioConfig probe = sc;
            if (ex.kind == ExperimentKind::Fig3 && (g < 1.0 || g != std::floor(g)))
                throw DomainError("element counts in 'grid' must be integers >= 1");
            apply_sweep(probe, ex.kind, g);
            probe.validate();
        }
    } catch (const DomainError& e) {
        throw ConfigError(Kind::OutOfRange, e.what());
    }
    return cfg;
}

LoadedConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(Kind::MissingFile, "cannot open config '" + path + "'");
    return parse_config(in);
}

ExperimentOutput run_experiment(const LoadedConfig& config, const RunOptions& options)
{
    using Clock = std::chrono::steady_clock;
    auto ms_since = [](Clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    };
    const ExperimentSpec& ex = config.experiment;
    const std::vector<double> grid = ex.grid.empty() ? default_grid(ex.kind) : ex.grid;
    const std::string var(sweep_variable(ex.kind));
    ExperimentOutput out;

    struct Task {
        std::size_t point;
        SchemeId scheme;
    };
    std::vector<Task> analytic_tasks;
    std::vector<std::vector<CsvRow>> per_point(grid.size());

    for (std::size_t i = 0; i < grid.size(); ++i) {
        ScenarioConfig sc = config.scenario;
        apply_sweep(sc, ex.kind, grid[i]);
        if (ex.monte_carlo) {
            MonteCarloOptions mc;
            mc.trials = ex.trials;
            mc.seed = ex.seed;
            mc.threads = options.threads;
            mc.eve = options.eve;
            const auto t0 = Clock::now();
            const auto est = run_monte_carlo(sc, ex.schemes, mc);
            const double elapsed = options.timing ? ms_since(t0) : -1.0;
            for (std::size_t s = 0; s < ex.schemes.size(); ++s)
                per_point[i].push_back(
                    {var, grid[i], ex.schemes[s], "mc", est[s].p_hat, est[s].std_err, est[s].trials, est[s].seed, elapsed});
        }
        if (ex.analytic || options.closed_form) {
            for (SchemeId id : ex.schemes) {
                const std::string why = analytic_unavailable_reason(id, sc);
                if (why.empty())
                    analytic_tasks.push_back({i, id});
                else if (is_fully_connected(id) || i == 0)
                    out.notes.push_back("analytic row omitted" + point_label(ex.kind, var, grid[i]) + ": " + why);
            }
        }
    }

    std::vector<std::vector<CsvRow>> analytic_rows(analytic_tasks.size());
    std::vector<std::vector<std::string>> analytic_notes(analytic_tasks.size());
    parallel_for(analytic_tasks.size(), options.threads, [&](std::size_t k) {
        const Task& task = analytic_tasks[k];
        ScenarioConfig sc = config.scenario;
        apply_sweep(sc, ex.kind, grid[task.point]);
        AnalyticOptions ao;
        ao.closed_form = options.closed_form;
        ao.printed = options.closed_form;
        const ClosedFormParams p = reduce_config(sc);
        if (options.closed_form && task.scheme == SchemeId::FcrGcsiPfs && p.N > kMaxSeriesUsers)
            throw CapacityError("closed-form series needs N <= " + std::to_string(kMaxSeriesUsers) + ", got N = " +
                                std::to_string(p.N));
        const auto t0 = Clock::now();
        const ZsrpResult r = task.scheme == SchemeId::FcrRs ? zsrp_rs(p, ao) : zsrp_pfs(p, ao);
        const double elapsed = options.timing ? ms_since(t0) : -1.0;
        const double x = grid[task.point];
        if (ex.analytic || options.closed_form)
            analytic_rows[k].push_back({var, x, task.scheme, "analytic", r.value, 0.0, 0, 0, elapsed});
        if (r.closed_form)
            analytic_rows[k].push_back({var, x, task.scheme, "closed-form", *r.closed_form, 0.0, 0, 0, elapsed});
        if (r.printed)
            analytic_rows[k].push_back({var, x, task.scheme, "printed", *r.printed, 0.0, 0, 0, elapsed});
        for (const auto& w : r.warnings)
            analytic_notes[k].push_back(std::string(to_string(task.scheme)) + point_label(ex.kind, var, x) + ": " + w);
    });

    for (std::size_t k = 0; k < analytic_tasks.size(); ++k) {
        auto& dst = per_point[analytic_tasks[k].point];
        dst.insert(dst.end(), analytic_rows[k].begin(), analytic_rows[k].end());
        out.notes.insert(out.notes.end(), analytic_notes[k].begin(), analytic_notes[k].end());
    }
    for (auto& rows : per_point)
        out.rows.insert(out.rows.end(), rows.begin(), rows.end());
    return out;
}

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows)
{
    out << kCsvHeader << '\n';
    for (const CsvRow& r : rows) {
        const bool sampled = r.trials > 0;
        out << r.sweep_var << ',' << format_number(r.sweep_value) << ',' << to_string(r.scheme) << ',' << r.evaluator
            << ',' << format_number(r.zsrp) << ',' << format_number(r.std_err) << ',';
        if (sampled)
            out << r.trials << ',' << r.seed;
        else
            out << ',';
        out << ',';
        if (r.wall_ms >= 0.0)
            out << format_number(r.wall_ms);
        out << '\n';
    }
}

} // namespace rissec
