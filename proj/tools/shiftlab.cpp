// Command-line front end: classify a single graph (check), estimate
// shift-enabled probabilities over parameter sweeps (sweep), and render sweep
// CSVs as SVG line charts (plot).
//
// Exit codes: 0 success (check: shift-enabled), 1 check: not shift-enabled,
// 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "shiftlab/edgelist_io.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/exact.hpp"
#include "shiftlab/graph.hpp"
#include "shiftlab/montecarlo.hpp"
#include "shiftlab/spectral.hpp"
#include "shiftlab/svg_plot.hpp"

namespace {

double to_double(const std::string& text, const char* what) {
    std::size_t used = 0;
    try {
        const double v = std::stod(text, &used);
        if (used == text.size() && std::isfinite(v)) return v;
    } catch (...) {
    }
    throw std::invalid_argument(std::string(what) + ": '" + text + "' is not a number");
}

std::int64_t to_integer(double value, const char* what) {
    const double rounded = std::nearbyint(value);
    if (std::abs(value - rounded) > 1e-9)
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return static_cast<std::int64_t>(rounded);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (const char ch : text) {
        if (ch == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    return parts;
}

// A model-parameter flag value: a plain number, a comma list, or an inclusive
// start:stop:step range. Lists and ranges mark the parameter as swept.
struct AxisSpec {
    std::vector<double> values;
    bool swept = false;
};

AxisSpec parse_axis(const std::string& text, const char* name) {
    AxisSpec axis;
    if (text.find(':') != std::string::npos) {
        const std::vector<std::string> parts = split(text, ':');
        if (parts.size() != 3)
            throw std::invalid_argument(std::string(name) +
                                        ": range syntax is start:stop:step");
        const double start = to_double(parts[0], name);
        const double stop = to_double(parts[1], name);
        const double step = to_double(parts[2], name);
        if (!(step > 0.0))
            throw std::invalid_argument(std::string(name) + ": range step must be > 0");
        if (stop < start)
            throw std::invalid_argument(std::string(name) + ": range stop must be >= start");
        const auto count =
            static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (std::int64_t i = 0; i < count; ++i)
            axis.values.push_back(start + static_cast<double>(i) * step);
        axis.swept = true;
    } else if (text.find(',') != std::string::npos) {
        for (const std::string& part : split(text, ','))
            axis.values.push_back(to_double(part, name));
        axis.swept = true;
    } else {
        axis.values.push_back(to_double(text, name));
    }
    return axis;
}

int run_check(const std::string& path, const std::string& kind_text, double tol, bool exact) {
    const shiftlab::Graph g = shiftlab::load_edge_list(path);
    const shiftlab::ShiftKind kind = shiftlab::parse_shift_kind(kind_text);
    const shiftlab::ShiftEnabledVerdict verdict =
        exact ? shiftlab::is_shift_enabled_exact(g, kind)
              : shiftlab::is_shift_enabled(g, kind, tol);

    std::cout << "file: " << path << '\n';
    std::cout << "n: " << g.vertex_count() << '\n';
    std::cout << "edges: " << g.edge_count() << '\n';
    std::cout << "kind: " << shiftlab::to_string(kind) << '\n';
    std::cout << "verdict: " << (verdict.enabled ? "shift-enabled" : "not-shift-enabled")
              << '\n';
    std::cout << "reason: " << shiftlab::to_string(verdict.reason) << '\n';
    if (verdict.pair_index >= 0) std::cout << "min-gap: " << verdict.gap << '\n';
    if (verdict.reason == shiftlab::VerdictReason::RepeatedEigenvalue)
        std::cout << "repeated-value: " << verdict.repeated_value << '\n';
    if (exact)
        std::cout << "tolerance: exact\n";
    else
        std::cout << "tolerance: " << verdict.tolerance_used << '\n';
    return verdict.enabled ? 0 : 1;
}

struct SweepOptions {
    std::string config_path;
    std::string model = "er-gnm";
    std::string n, m, p, k_half, beta, m0, m_per_node;  // empty = library default
    std::string weights = "unit";
    std::string signed_mode = "none";
    std::string kind = "laplacian";
    std::string trials, tol, seed, threads;
    std::string out_path;
    bool progress = false;
};

void merge_config_file(const CLI::App& cmd, SweepOptions& opt) {
    std::ifstream in(opt.config_path);
    if (!in)
        throw std::invalid_argument("cannot open config file '" + opt.config_path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config file: " + std::string(e.what()));
    }
    if (!doc.is_object())
        throw std::invalid_argument("config file must hold a JSON object");

    struct Entry {
        const char* key;
        const char* flag;
        std::string* target;
    };
    const Entry entries[] = {
        {"model", "--model", &opt.model},
        {"n", "--n", &opt.n},
        {"m", "--m", &opt.m},
        {"p", "--p", &opt.p},
        {"k_half", "--k-half", &opt.k_half},
        {"beta", "--beta", &opt.beta},
        {"m0", "--m0", &opt.m0},
        {"m_per_node", "--m-per-node", &opt.m_per_node},
        {"weights", "--weights", &opt.weights},
        {"signed_mode", "--signed-mode", &opt.signed_mode},
        {"kind", "--kind", &opt.kind},
        {"trials", "--trials", &opt.trials},
        {"tol", "--tol", &opt.tol},
        {"seed", "--seed", &opt.seed},
        {"threads", "--threads", &opt.threads},
    };
    std::set<std::string> known;
    for (const Entry& e : entries) known.insert(e.key);
    for (const auto& item : doc.items())
        if (known.find(item.key()) == known.end())
            throw std::invalid_argument("config file: unknown key '" + item.key() + "'");
    for (const Entry& e : entries) {
        if (cmd.count(e.flag) > 0 || !doc.contains(e.key)) continue;  // flags win
        const nlohmann::json& value = doc[e.key];
        *e.target = value.is_string() ? value.get<std::string>() : value.dump();
    }
}

int run_sweep_command(const CLI::App& cmd, SweepOptions opt) {
    if (!opt.config_path.empty()) merge_config_file(cmd, opt);

    shiftlab::ExperimentConfig cfg;
    cfg.model = shiftlab::parse_graph_model(opt.model);
    cfg.weights = shiftlab::parse_weight_distribution(opt.weights);
    cfg.signed_mode = shiftlab::parse_signed_mode(opt.signed_mode);
    cfg.shift_kind = shiftlab::parse_shift_kind(opt.kind);
    if (!opt.trials.empty())
        cfg.trials = to_integer(to_double(opt.trials, "trials"), "trials");
    if (!opt.tol.empty()) cfg.tol_rel = to_double(opt.tol, "tol");
    if (!opt.threads.empty())
        cfg.threads = static_cast<int>(to_integer(to_double(opt.threads, "threads"), "threads"));
    if (!opt.seed.empty()) {
        try {
            std::size_t used = 0;
            cfg.seed = std::stoull(opt.seed, &used);
            if (used != opt.seed.size()) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("seed: '" + opt.seed + "' is not an unsigned integer");
        }
    }

    // Exactly one model parameter may carry a range or list; it becomes the
    // sweep axis. With none, the model's natural axis is run at its fixed value.
    struct ParamFlag {
        const char* param;
        const std::string* text;
    };
    const ParamFlag params[] = {
        {"n", &opt.n},           {"m", &opt.m},     {"p", &opt.p},
        {"k_half", &opt.k_half}, {"beta", &opt.beta}, {"m0", &opt.m0},
        {"m_per_node", &opt.m_per_node},
    };
    for (const ParamFlag& pf : params) {
        if (pf.text->empty()) continue;
        const AxisSpec axis = parse_axis(*pf.text, pf.param);
        if (axis.swept) {
            if (!cfg.sweep_param.empty())
                throw std::invalid_argument("only one parameter may be a range (got " +
                                            cfg.sweep_param + " and " + pf.param + ")");
            cfg.sweep_param = pf.param;
            cfg.sweep_values = axis.values;
            continue;
        }
        const double v = axis.values.front();
        const std::string name(pf.param);
        if (name == "n")
            cfg.n = static_cast<int>(to_integer(v, "n"));
        else if (name == "m")
            cfg.m = to_integer(v, "m");
        else if (name == "p")
            cfg.p_edge = v;
        else if (name == "k_half")
            cfg.k_half = static_cast<int>(to_integer(v, "k_half"));
        else if (name == "beta")
            cfg.beta = v;
        else if (name == "m0")
            cfg.m0 = static_cast<int>(to_integer(v, "m0"));
        else
            cfg.m_per_node = static_cast<int>(to_integer(v, "m_per_node"));
    }
    if (cfg.sweep_param.empty()) {
        switch (cfg.model) {
            case shiftlab::GraphModel::ErGnm:
                cfg.sweep_param = "m";
                cfg.sweep_values = {static_cast<double>(cfg.m)};
                break;
            case shiftlab::GraphModel::ErGnp:
                cfg.sweep_param = "p";
                cfg.sweep_values = {cfg.p_edge};
                break;
            case shiftlab::GraphModel::Ws:
                cfg.sweep_param = "beta";
                cfg.sweep_values = {cfg.beta};
                break;
            case shiftlab::GraphModel::Ba:
                cfg.sweep_param = "m_per_node";
                cfg.sweep_values = {static_cast<double>(cfg.m_per_node)};
                break;
        }
    }
    cfg.validate();

    shiftlab::ProgressFn progress;
    if (opt.progress) {
        const std::size_t total = cfg.sweep_values.size();
        const std::string param = cfg.sweep_param;
        progress = [total, param](int index, const shiftlab::SweepRow& row) {
            std::fprintf(stderr,
                         "point %d/%zu: %s = %g  p_hat = %.4f  (successes %lld/%lld, "
                         "errors %lld)\n",
                         index + 1, total, param.c_str(), row.param_value, row.p_hat,
                         static_cast<long long>(row.successes),
                         static_cast<long long>(row.trials),
                         static_cast<long long>(row.errors));
        };
    }

    const shiftlab::SweepResult result = shiftlab::run_sweep(cfg, progress);
    if (opt.out_path.empty()) {
        shiftlab::write_csv(std::cout, result);
    } else {
        std::ofstream out(opt.out_path);
        if (!out)
            throw std::invalid_argument("cannot open output file '" + opt.out_path + "'");
        shiftlab::write_csv(out, result);
        if (!out.good()) throw std::runtime_error("failed writing '" + opt.out_path + "'");
    }
    return 0;
}

int run_plot(const std::string& csv_path, const std::string& out_path,
             const shiftlab::PlotSpec& spec) {
    std::ifstream in(csv_path);
    if (!in) throw std::invalid_argument("cannot open CSV file '" + csv_path + "'");
    const shiftlab::CsvTable table = shiftlab::read_csv(in);
    const std::string svg = shiftlab::render_line_chart(table, spec);
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << svg;
    if (!out.good()) throw std::runtime_error("failed writing '" + out_path + "'");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shiftlab: shift-enabled graph decisions and Monte Carlo sweeps"};
    app.require_subcommand(1);

    // check
    CLI::App* check = app.add_subcommand("check", "Decide whether a graph is shift-enabled");
    std::string check_file, check_kind = "laplacian";
    double check_tol = shiftlab::kDefaultTolRel;
    bool check_exact = false;
    check->add_option("file", check_file, "edge-list file (n <count> header, 'u v w' lines)")
        ->required();
    check->add_option("--kind", check_kind,
                      "adjacency | laplacian | normalized-laplacian | signless-laplacian | "
                      "transition | signed-laplacian");
    check->add_option("--tol", check_tol, "relative eigenvalue-gap tolerance");
    check->add_flag("--exact", check_exact,
                    "decide by exact integer arithmetic (integer-entry kinds, n <= 64)");

    // sweep
    CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo sweep, CSV output");
    SweepOptions opt;
    sweep->add_option("--config", opt.config_path, "JSON config file; explicit flags override");
    sweep->add_option("--model", opt.model, "er-gnm | er-gnp | ws | ba");
    const char* axis_help = "number, comma list, or start:stop:step range";
    sweep->add_option("--n", opt.n, axis_help);
    sweep->add_option("--m", opt.m, axis_help);
    sweep->add_option("--p", opt.p, axis_help);
    sweep->add_option("--k-half", opt.k_half, axis_help);
    sweep->add_option("--beta", opt.beta, axis_help);
    sweep->add_option("--m0", opt.m0, axis_help);
    sweep->add_option("--m-per-node", opt.m_per_node, axis_help);
    sweep->add_option("--weights", opt.weights, "unit | exp:RATE | gauss:MEAN:STDDEV | signed-unit");
    sweep->add_option("--signed-mode", opt.signed_mode, "none | balanced | unbalanced");
    sweep->add_option("--kind", opt.kind, "shift matrix kind");
    sweep->add_option("--trials", opt.trials, "trials per sweep point (default 10000)");
    sweep->add_option("--tol", opt.tol, "relative eigenvalue-gap tolerance");
    sweep->add_option("--seed", opt.seed, "64-bit experiment seed (default 0)");
    sweep->add_option("--threads", opt.threads, "worker threads (0 = SHIFTLAB_THREADS or all cores)");
    sweep->add_option("--out", opt.out_path, "CSV output file (default stdout)");
    sweep->add_flag("--progress", opt.progress, "per-point progress on stderr");

    // plot
    CLI::App* plot = app.add_subcommand("plot", "Render a sweep CSV as an SVG line chart");
    std::string plot_csv, plot_out;
    shiftlab::PlotSpec spec;
    plot->add_option("file", plot_csv, "input CSV")->required();
    plot->add_option("-o,--out", plot_out, "output SVG file")->required();
    plot->add_option("--x", spec.x_column, "x column (default param_value)");
    plot->add_option("--y", spec.y_column, "y column (default p_hat)");
    plot->add_option("--series", spec.series_column, "group rows into one curve per value");
    plot->add_flag("--ci", spec.ci_band, "shade the ci_low..ci_high band");
    plot->add_option("--title", spec.title, "chart title");
    plot->add_option("--x-label", spec.x_label, "x axis label (default x column)");
    plot->add_option("--y-label", spec.y_label, "y axis label (default y column)");
    plot->add_option("--width", spec.width, "SVG width in px");
    plot->add_option("--height", spec.height, "SVG height in px");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) return run_check(check_file, check_kind, check_tol, check_exact);
        if (*sweep) return run_sweep_command(*sweep, opt);
        return run_plot(plot_csv, plot_out, spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
