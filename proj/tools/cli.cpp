#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "rendezvous/analysis.hpp"
#include "rendezvous/analytic.hpp"
#include "rendezvous/optimize.hpp"
#include "rendezvous/simulate.hpp"

namespace rendezvous::cli {

std::string format_number(double value)
{
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (std::isnan(value)) {
        return "nan";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

std::string cell_text(const Cell& cell)
{
    if (const auto* d = std::get_if<double>(&cell)) {
        return format_number(*d);
    }
    if (const auto* i = std::get_if<long long>(&cell)) {
        return std::to_string(*i);
    }
    return std::get<std::string>(cell);
}

}  // namespace

void write_csv(std::ostream& out, const Table& table)
{
    out << "# " << table.comment << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << cell_text(row[i]);
        }
        out << '\n';
    }
}

void write_pretty(std::ostream& out, const Table& table)
{
    out << "# " << table.comment << '\n';
    if (table.rows.size() == 1) {
        std::size_t width = 0;
        for (const auto& c : table.columns) {
            width = std::max(width, c.size());
        }
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            out << table.columns[i] << std::string(width - table.columns[i].size(), ' ') << "  "
                << cell_text(table.rows[0][i]) << '\n';
        }
        return;
    }
    std::vector<std::size_t> widths(table.columns.size());
    std::vector<std::vector<std::string>> text;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        widths[i] = table.columns[i].size();
    }
    for (const auto& row : table.rows) {
        auto& line = text.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(cell_text(row[i]));
            widths[i] = std::max(widths[i], line.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << (i ? "  " : "") << std::string(widths[i] - cells[i].size(), ' ') << cells[i];
        }
        out << '\n';
    };
    emit(table.columns);
    for (const auto& line : text) {
        emit(line);
    }
}

namespace {

struct Config
{
    std::string command;
    std::optional<double> rho;
    std::optional<double> alpha;
    bool degrees = false;
    std::string k = "inf";
    std::optional<double> beta;
    std::optional<double> gamma;
    std::int64_t trials = 100000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double epsilon = 1.0;
    std::optional<double> lambda;
    std::string family;
    double rho_min = 2.5;
    double rho_max = 10.0;
    int points = 100;
    std::string mode = "spiral";
    std::int64_t round_cap = kDefaultRoundCap;
    std::string out_path;
    std::string format;
};

double to_radians(const Config& cfg, double angle)
{
    return cfg.degrees ? angle * kPi / 180.0 : angle;
}

StepCount parse_steps(const std::string& text)
{
    if (text == "inf" || text == "unbounded") {
        return StepCount::unbounded();
    }
    long long k = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, k);
    if (ec != std::errc{} || ptr != end) {
        throw UsageError("--k must be a positive integer or 'inf', got '" + text + "'");
    }
    return StepCount::finite(k);
}

Instance instance_of(const Config& cfg)
{
    if (cfg.rho.has_value() == cfg.alpha.has_value()) {
        throw UsageError("exactly one of --rho and --alpha is required");
    }
    return cfg.rho ? Instance::from_rho(*cfg.rho) : Instance::from_alpha(to_radians(cfg, *cfg.alpha));
}

/// Optimal strategy of the class when no angles are given.
Strategy default_strategy(const Instance& instance, StepCount steps)
{
    if (steps.is_unbounded()) {
        return optimal_inf(instance).strategy;
    }
    if (steps.count() == 1) {
        return optimal_1rb2(instance);
    }
    return grid_refine(instance, steps);
}

Strategy strategy_of(const Config& cfg, const Instance& instance)
{
    const StepCount steps = parse_steps(cfg.k);
    if (cfg.beta.has_value() != cfg.gamma.has_value()) {
        throw UsageError("--beta and --gamma must be given together");
    }
    if (!cfg.beta) {
        return default_strategy(instance, steps);
    }
    return Strategy{steps, to_radians(cfg, *cfg.beta), to_radians(cfg, *cfg.gamma)};
}

std::string echo(const Config& cfg)
{
    std::ostringstream os;
    os << "command=" << cfg.command;
    if (cfg.rho) {
        os << " rho=" << format_number(*cfg.rho);
    }
    if (cfg.alpha) {
        os << " alpha=" << format_number(*cfg.alpha);
    }
    if (cfg.degrees) {
        os << " degrees=true";
    }
    const auto& c = cfg.command;
    if (c == "eval" || c == "optimize" || c == "simulate") {
        os << " k=" << cfg.k;
    }
    if (cfg.beta) {
        os << " beta=" << format_number(*cfg.beta) << " gamma=" << format_number(*cfg.gamma);
    }
    if (c == "simulate") {
        os << " trials=" << cfg.trials << " threads=" << cfg.threads;
    }
    if (c == "tradeoff") {
        os << " family=" << cfg.family << " epsilon=" << format_number(cfg.epsilon);
        if (cfg.lambda) {
            os << " lambda=" << format_number(*cfg.lambda);
        }
    }
    if (c == "effectiveness") {
        os << " family=" << cfg.family;
    }
    if (c == "curves") {
        os << " rho_min=" << format_number(cfg.rho_min) << " rho_max=" << format_number(cfg.rho_max)
           << " points=" << cfg.points;
    }
    if (c == "trajectory") {
        os << " mode=" << cfg.mode << " round_cap=" << cfg.round_cap;
    }
    os << " seed=" << cfg.seed;
    return os.str();
}

Table new_table(const Config& cfg, std::vector<std::string> columns)
{
    Table t;
    t.comment = echo(cfg);
    t.columns = std::move(columns);
    return t;
}

Cell steps_cell(StepCount steps)
{
    return steps.to_string();
}

Table cmd_eval(const Config& cfg)
{
    const Instance instance = instance_of(cfg);
    const Strategy s = strategy_of(cfg, instance);
    const PerformanceReport r = evaluate(instance, s);
    Table t = new_table(cfg, {"rho", "alpha", "k", "beta", "gamma", "expected_time_alpha", "competitive_ratio", "energy_alpha", "energy_rho"});
    t.rows.push_back({r.rho, instance.alpha(), steps_cell(s.steps), s.beta, s.gamma, r.expected_time_alpha,
                      r.competitive_ratio, r.energy_alpha, r.energy_rho()});
    return t;
}

Table cmd_optimize(const Config& cfg)
{
    if (cfg.beta || cfg.gamma) {
        throw UsageError("optimize does not take --beta/--gamma");
    }
    const Instance instance = instance_of(cfg);
    const StepCount steps = parse_steps(cfg.k);
    Strategy s;
    std::string source = "closed_form";
    Cell r1 = std::string("n/a");
    Cell r2 = std::string("n/a");
    if (steps.is_unbounded()) {
        const Optimum o = optimal_inf(instance);
        s = o.strategy;
        if (o.source == OptimumSource::ClosedForm) {
            const auto [a, b] = residuals_inf(instance, s);
            r1 = a;
            r2 = b;
        } else {
            source = "numeric_fallback";
        }
    } else if (steps.count() == 1) {
        s = optimal_1rb2(instance);
        if (s.gamma > 0.0) {
            const auto [a, b] = residuals_1rb2(instance, s);
            r1 = a;
            r2 = b;
        }
    } else {
        s = grid_refine(instance, steps);
        source = "numeric_fallback";
    }
    const PerformanceReport r = evaluate(instance, s);
    Table t = new_table(cfg, {"rho", "alpha", "k", "beta", "gamma", "source", "residual_1", "residual_2",
                              "competitive_ratio", "energy_rho"});
    t.rows.push_back({r.rho, instance.alpha(), steps_cell(s.steps), s.beta, s.gamma, source, r1, r2,
                      r.competitive_ratio, r.energy_rho()});
    return t;
}

Table cmd_simulate(const Config& cfg)
{
    const Instance instance = instance_of(cfg);
    const Strategy s = strategy_of(cfg, instance);
    const double analytic = expected_time(instance, s);
    MonteCarloOptions options;
    options.threads = cfg.threads;
    options.round_cap = cfg.round_cap;
    const SimulationSummary m = monte_carlo(instance, s, cfg.trials, cfg.seed, options);
    const double deviation = std::abs(m.mean_time - analytic);
    const bool pass = deviation <= 3.0 * m.std_error;
    Table t = new_table(cfg, {"rho", "alpha", "k", "beta", "gamma", "trials", "seed", "mean", "std_error",
                              "analytic", "z", "three_sigma", "first_darting", "second_darting", "origin",
                              "truncated", "max_meeting_gap"});
    t.rows.push_back({instance.rho(), instance.alpha(), steps_cell(s.steps), s.beta, s.gamma,
                      static_cast<long long>(m.trials), std::to_string(m.seed), m.mean_time, m.std_error,
                      analytic, m.std_error > 0 ? deviation / m.std_error : 0.0,
                      std::string(pass ? "PASS" : "FAIL"), static_cast<long long>(m.first_darting),
                      static_cast<long long>(m.second_darting), static_cast<long long>(m.origin),
                      static_cast<long long>(m.truncated), m.max_meeting_gap});
    return t;
}

const char* kind_name(EffectivenessResult::Kind kind)
{
    switch (kind) {
    case EffectivenessResult::Kind::Finite:
        return "finite";
    case EffectivenessResult::Kind::Zero:
        return "zero";
    case EffectivenessResult::Kind::BeyondSearchRange:
        return "beyond_search_range";
    }
    return "?";
}

Table cmd_effectiveness(Config cfg)
{
    static const std::vector<std::pair<std::string, CompetitiveRatioCurve>> kCurves{
        {"naive", naive_curve},
        {"one-rb", one_rb_curve},
        {"one-step", one_step_curve},
        {"unbounded", unbounded_curve},
        {"greedy-bisector", greedy_bisector_ratio},
        {"han", [](double rho) { return benchmark_curves(rho).han; }},
    };
    if (cfg.family.empty()) {
        cfg.family = "all";
    }
    Table t = new_table(cfg, {"family", "kind", "rho", "monotone_verified"});
    bool found = false;
    for (const auto& [name, curve] : kCurves) {
        if (cfg.family != "all" && cfg.family != name) {
            continue;
        }
        found = true;
        const EffectivenessResult r = effectiveness(curve);
        t.rows.push_back({name, std::string(kind_name(r.kind)), r.rho,
                          std::string(r.monotone_verified ? "true" : "false")});
    }
    if (!found) {
        throw UsageError("unknown --family '" + cfg.family + "'");
    }
    return t;
}

Table cmd_asymptotics(const Config& cfg)
{
    if (cfg.alpha) {
        throw UsageError("asymptotics takes --rho probes only");
    }
    std::vector<double> probes{1e3, 1e4, 1e5};
    if (cfg.rho) {
        probes = {*cfg.rho};
    }
    Table t = new_table(cfg, {"rho_probe", "beta_slope", "gamma_slope", "cr_gap_scaled", "energy_scaled"});
    for (const double rho : probes) {
        const AsymptoticsReport r = asymptotics_report(rho);
        t.rows.push_back({r.rho_probe, r.beta_slope, r.gamma_slope, r.cr_gap_scaled, r.energy_scaled});
    }
    t.rows.push_back({std::string("limit"), AsymptoticsReport::kBetaSlope, AsymptoticsReport::kGammaSlope,
                      AsymptoticsReport::kCrGapScaled, AsymptoticsReport::kEnergyScaled});
    return t;
}

Table cmd_tradeoff(Config cfg)
{
    if (cfg.family.empty()) {
        cfg.family = "A";
    }
    TradeoffPoint p;
    if (cfg.family == "A") {
        if (cfg.lambda) {
            throw UsageError("--lambda applies to family B only");
        }
        p = tradeoff_family_A(cfg.epsilon);
    } else if (cfg.family == "B") {
        p = cfg.lambda ? tradeoff_family_B(cfg.epsilon, *cfg.lambda) : tradeoff_family_B(cfg.epsilon);
    } else if (cfg.family == "B-equal") {
        if (cfg.lambda) {
            throw UsageError("--lambda applies to family B only");
        }
        p = tradeoff_family_B_equal(cfg.epsilon);
    } else {
        throw UsageError("--family must be A, B or B-equal, got '" + cfg.family + "'");
    }
    if (!cfg.rho && !cfg.alpha) {
        cfg.rho = 1e4;
    }
    const Instance instance = instance_of(cfg);
    const Strategy s = p.strategy_of(instance);
    const TradeoffEvaluation e = evaluate_tradeoff(p, instance.rho());
    const Cell gap_limit = p.family == TradeoffFamily::A ? Cell{p.limit_cr_gap_scaled} : Cell{std::string("n/a")};
    Table t = new_table(cfg, {"family", "epsilon", "lambda", "rho", "beta", "gamma", "competitive_ratio",
                              "limit_competitive_ratio", "scaled_energy", "limit_scaled_energy", "cr_gap_scaled",
                              "limit_cr_gap_scaled"});
    t.rows.push_back({cfg.family, p.epsilon, p.family == TradeoffFamily::B ? Cell{p.lambda} : Cell{std::string("n/a")},
                      e.rho, s.beta, s.gamma, e.competitive_ratio, p.limit_competitive_ratio, e.scaled_energy,
                      p.limit_scaled_energy, e.cr_gap_scaled, gap_limit});
    return t;
}

Table cmd_curves(const Config& cfg)
{
    if (cfg.points < 2) {
        throw UsageError("--points must be at least 2");
    }
    if (!(cfg.rho_min < cfg.rho_max)) {
        throw UsageError("--rho-min must be below --rho-max");
    }
    std::vector<double> rhos(static_cast<std::size_t>(cfg.points));
    for (int i = 0; i < cfg.points; ++i) {
        rhos[static_cast<std::size_t>(i)] =
            cfg.rho_min + (cfg.rho_max - cfg.rho_min) * static_cast<double>(i) / (cfg.points - 1);
    }
    Table t = new_table(cfg, {"rho", "naive", "one_rb", "one_step", "greedy_bisector", "unbounded"});
    for (const CurveRow& r : curve_table(rhos)) {
        t.rows.push_back({r.rho, r.naive, r.one_rb, r.one_step, r.greedy_bisector, r.unbounded});
    }
    return t;
}

Table cmd_trajectory(const Config& cfg)
{
    if (cfg.k != "inf") {
        throw UsageError("trajectory follows unbounded strategies only");
    }
    const Instance instance = instance_of(cfg);
    const Strategy s = strategy_of(cfg, instance);
    TrajectoryOptions options;
    if (cfg.mode == "spiral") {
        options.mode = TrajectoryMode::Spiral;
    } else if (cfg.mode == "random") {
        options.mode = TrajectoryMode::Random;
    } else {
        throw UsageError("--mode must be spiral or random, got '" + cfg.mode + "'");
    }
    options.seed = cfg.seed;
    options.round_cap = cfg.round_cap;
    Table t = new_table(cfg, {"round", "x", "y", "radius", "length"});
    for (const TrajectoryPoint& p : agent_trajectory(instance, s, options)) {
        t.rows.push_back({static_cast<long long>(p.round), p.x, p.y, p.radius, p.length});
    }
    t.comment += " beta=" + format_number(s.beta) + " gamma=" + format_number(s.gamma);
    return t;
}

void emit(const Config& cfg, const Table& table, std::ostream& out)
{
    const std::string format = !cfg.format.empty() ? cfg.format : (cfg.out_path.empty() ? "pretty" : "csv");
    auto write = [&](std::ostream& os) {
        if (format == "csv") {
            write_csv(os, table);
        } else {
            write_pretty(os, table);
        }
    };
    if (cfg.out_path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + cfg.out_path + "'");
    }
    write(file);
    file.close();
    if (!file) {
        throw std::runtime_error("failed writing '" + cfg.out_path + "'");
    }
    out << "wrote " << table.rows.size() << " rows to " << cfg.out_path << '\n';
    if (cfg.command == "trajectory" && !table.rows.empty()) {
        out << "total_length " << cell_text(table.rows.back().back()) << '\n';
    }
}

void add_instance_flags(CLI::App* sub, Config& cfg)
{
    auto* rho = sub->add_option("--rho", cfg.rho, "reference distance (agents at distance 2)");
    auto* alpha = sub->add_option("--alpha", cfg.alpha, "half arc between the agents on the unit disk");
    rho->excludes(alpha);
    sub->add_flag("--degrees", cfg.degrees, "read --alpha/--beta/--gamma in degrees");
}

void add_strategy_flags(CLI::App* sub, Config& cfg, bool with_k = true)
{
    if (with_k) {
        sub->add_option("--k", cfg.k, "number of random rounds, or 'inf'")->capture_default_str();
    }
    sub->add_option("--beta", cfg.beta, "first darting angle (default: optimum of the class)");
    sub->add_option("--gamma", cfg.gamma, "second darting angle (default: optimum of the class)");
}

void add_output_flags(CLI::App* sub, Config& cfg)
{
    sub->add_option("--out", cfg.out_path, "write the table to this file");
    sub->add_option("--format", cfg.format, "csv or pretty (default: csv with --out, else pretty)")
        ->check(CLI::IsMember({"csv", "pretty"}));
    sub->add_option("--seed", cfg.seed, "random seed (echoed in every header)")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Symmetric rendezvous in a disk: evaluation, optimization and simulation"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "expected time, competitive ratio and energy of a strategy");
    add_instance_flags(eval, cfg);
    add_strategy_flags(eval, cfg);
    add_output_flags(eval, cfg);

    auto* optimize = app.add_subcommand("optimize", "optimal angles of a strategy class");
    add_instance_flags(optimize, cfg);
    optimize->add_option("--k", cfg.k, "number of random rounds, or 'inf'")->capture_default_str();
    optimize->add_option("--beta", cfg.beta)->group("");
    optimize->add_option("--gamma", cfg.gamma)->group("");
    add_output_flags(optimize, cfg);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate next to the analytic value");
    add_instance_flags(simulate, cfg);
    add_strategy_flags(simulate, cfg);
    add_output_flags(simulate, cfg);
    simulate->add_option("--trials", cfg.trials, "number of trials")->capture_default_str()->check(CLI::PositiveNumber);
    simulate->add_option("--threads", cfg.threads, "worker threads (results do not depend on it)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--round-cap", cfg.round_cap, "round cap for unbounded strategies")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto* effect = app.add_subcommand("effectiveness", "largest rho with competitive ratio <= 4.25");
    effect->add_option("--family", cfg.family,
                       "naive, one-rb, one-step, unbounded, greedy-bisector, han or all (default)");
    add_output_flags(effect, cfg);

    auto* asym = app.add_subcommand("asymptotics", "large-rho behaviour of the optimal unbounded strategy");
    asym->add_option("--rho", cfg.rho, "probe (default: 1e3, 1e4 and 1e5)");
    asym->add_option("--alpha", cfg.alpha)->group("");
    add_output_flags(asym, cfg);

    auto* trade = app.add_subcommand("tradeoff", "competitive ratio versus energy families");
    add_instance_flags(trade, cfg);
    trade->add_option("--family", cfg.family, "A, B or B-equal (default A)");
    trade->add_option("--epsilon", cfg.epsilon, "tradeoff parameter")->capture_default_str();
    trade->add_option("--lambda", cfg.lambda, "family B split (default 3/11)");
    add_output_flags(trade, cfg);

    auto* curves = app.add_subcommand("curves", "competitive-ratio curves of all strategy classes");
    curves->add_option("--rho-min", cfg.rho_min)->capture_default_str();
    curves->add_option("--rho-max", cfg.rho_max)->capture_default_str();
    curves->add_option("--points", cfg.points)->capture_default_str();
    add_output_flags(curves, cfg);

    auto* traj = app.add_subcommand("trajectory", "path of one agent when rendezvous never happens");
    add_instance_flags(traj, cfg);
    add_strategy_flags(traj, cfg);
    traj->add_option("--mode", cfg.mode, "spiral or random")->capture_default_str();
    traj->add_option("--round-cap", cfg.round_cap)->capture_default_str()->check(CLI::PositiveNumber);
    add_output_flags(traj, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    const std::vector<std::pair<CLI::App*, std::function<Table(const Config&)>>> commands{
        {eval, cmd_eval},           {optimize, cmd_optimize},   {simulate, cmd_simulate},
        {effect, cmd_effectiveness}, {asym, cmd_asymptotics},   {trade, cmd_tradeoff},
        {curves, cmd_curves},       {traj, cmd_trajectory},
    };
    try {
        for (const auto& [sub, handler] : commands) {
            if (sub->parsed()) {
                cfg.command = sub->get_name();
                emit(cfg, handler(cfg), out);
            }
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"rendezvous"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rendezvous::cli
