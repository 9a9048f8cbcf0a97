#include "shiftlab/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <variant>

#include "shiftlab/errors.hpp"
#include "shiftlab/parallel.hpp"
#include "shiftlab/rng.hpp"

namespace shiftlab {

std::string_view to_string(GraphModel model) {
    switch (model) {
        case GraphModel::ErGnm: return "er-gnm";
        case GraphModel::ErGnp: return "er-gnp";
        case GraphModel::Ws: return "ws";
        case GraphModel::Ba: return "ba";
    }
    return "?";
}

GraphModel parse_graph_model(const std::string& text) {
    for (const GraphModel model :
         {GraphModel::ErGnm, GraphModel::ErGnp, GraphModel::Ws, GraphModel::Ba})
        if (text == to_string(model)) return model;
    throw std::invalid_argument("unrecognized model '" + text +
                                "' (expected er-gnm, er-gnp, ws, ba)");
}

std::string_view to_string(SignedMode mode) {
    switch (mode) {
        case SignedMode::None: return "none";
        case SignedMode::Balanced: return "balanced";
        case SignedMode::Unbalanced: return "unbalanced";
    }
    return "?";
}

SignedMode parse_signed_mode(const std::string& text) {
    for (const SignedMode mode : {SignedMode::None, SignedMode::Balanced, SignedMode::Unbalanced})
        if (text == to_string(mode)) return mode;
    throw std::invalid_argument("unrecognized signed mode '" + text +
                                "' (expected none, balanced, unbalanced)");
}

namespace {

// The model parameters in effect at one sweep point.
struct PointParams {
    int n;
    std::int64_t m;
    double p_edge;
    int k_half;
    double beta;
    int m0;
    int m_per_node;
};

std::int64_t integer_param(double value, const char* name) {
    const double rounded = std::nearbyint(value);
    if (!std::isfinite(value) || std::abs(value - rounded) > 1e-9)
        throw std::invalid_argument(std::string(name) + " must be an integer, got " +
                                    std::to_string(value));
    return static_cast<std::int64_t>(rounded);
}

PointParams params_for(const ExperimentConfig& cfg, double value) {
    PointParams pp{cfg.n, cfg.m, cfg.p_edge, cfg.k_half, cfg.beta, cfg.m0, cfg.m_per_node};
    const std::string& param = cfg.sweep_param;
    if (param == "n")
        pp.n = static_cast<int>(integer_param(value, "n"));
    else if (param == "m")
        pp.m = integer_param(value, "m");
    else if (param == "p")
        pp.p_edge = value;
    else if (param == "k_half")
        pp.k_half = static_cast<int>(integer_param(value, "k_half"));
    else if (param == "beta")
        pp.beta = value;
    else if (param == "m0")
        pp.m0 = static_cast<int>(integer_param(value, "m0"));
    else if (param == "m_per_node")
        pp.m_per_node = static_cast<int>(integer_param(value, "m_per_node"));
    else
        throw std::invalid_argument("sweep_param '" + param +
                                    "' is not one of n, m, p, k_half, beta, m0, m_per_node");
    return pp;
}

bool param_applies(GraphModel model, const std::string& param) {
    if (param == "n") return true;
    switch (model) {
        case GraphModel::ErGnm: return param == "m";
        case GraphModel::ErGnp: return param == "p";
        case GraphModel::Ws: return param == "k_half" || param == "beta";
        case GraphModel::Ba: return param == "m0" || param == "m_per_node";
    }
    return false;
}

// Mirrors the generator preconditions so a bad config fails up front with the
// offending field named, instead of per trial.
void check_point(GraphModel model, const PointParams& pp) {
    if (pp.n < 1) throw std::invalid_argument("n must be >= 1");
    switch (model) {
        case GraphModel::ErGnm: {
            const std::int64_t total = static_cast<std::int64_t>(pp.n) * (pp.n - 1) / 2;
            if (pp.m < 0 || pp.m > total)
                throw std::invalid_argument("m must lie in [0, n(n-1)/2], got m = " +
                                            std::to_string(pp.m) + " with n = " +
                                            std::to_string(pp.n));
            break;
        }
        case GraphModel::ErGnp:
            if (!(pp.p_edge >= 0.0 && pp.p_edge <= 1.0))
                throw std::invalid_argument("p must lie in [0, 1]");
            break;
        case GraphModel::Ws:
            if (pp.n < 3) throw std::invalid_argument("n must be >= 3 for the ws model");
            if (pp.k_half < 1 || 2 * pp.k_half > pp.n - 1)
                throw std::invalid_argument("k_half must lie in [1, (n-1)/2]");
            if (!(pp.beta >= 0.0 && pp.beta <= 1.0))
                throw std::invalid_argument("beta must lie in [0, 1]");
            break;
        case GraphModel::Ba:
            if (pp.m_per_node < 1 || pp.m_per_node > pp.m0)
                throw std::invalid_argument("m_per_node must lie in [1, m0]");
            if (pp.m0 > pp.n) throw std::invalid_argument("m0 must be <= n");
            break;
    }
}

Graph make_trial_graph(const ExperimentConfig& cfg, const PointParams& pp,
                       std::uint64_t trial_seed) {
    Graph g = [&]() -> Graph {
        switch (cfg.model) {
            case GraphModel::ErGnm: return gen_er_gnm(pp.n, pp.m, trial_seed);
            case GraphModel::ErGnp: return gen_er_gnp(pp.n, pp.p_edge, trial_seed);
            case GraphModel::Ws: return gen_ws(pp.n, pp.k_half, pp.beta, trial_seed);
            case GraphModel::Ba: return gen_ba(pp.n, pp.m0, pp.m_per_node, trial_seed);
        }
        throw std::logic_error("unreachable model");
    }();
    switch (cfg.signed_mode) {
        case SignedMode::None:
            if (!std::holds_alternative<UnitWeight>(cfg.weights))
                g = apply_weights(g, cfg.weights, trial_seed);
            break;
        case SignedMode::Balanced:
            g = apply_balanced_signs(g, trial_seed);
            break;
        case SignedMode::Unbalanced:
            g = apply_weights(g, SignedUnitWeight{}, trial_seed);
            break;
    }
    return g;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!(tol_rel > 0.0)) throw std::invalid_argument("tol_rel must be positive");
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");
    if (sweep_param.empty())
        throw std::invalid_argument("sweep_param must name the swept parameter");
    if (sweep_values.empty()) throw std::invalid_argument("sweep_values must be nonempty");
    if (!param_applies(model, sweep_param))
        throw std::invalid_argument("sweep_param '" + sweep_param +
                                    "' does not apply to model " +
                                    std::string(to_string(model)));
    if (const auto* e = std::get_if<ExponentialWeight>(&weights); e && !(e->rate > 0.0))
        throw std::invalid_argument("weights: exponential rate must be > 0");
    if (const auto* g = std::get_if<GaussianWeight>(&weights); g && !(g->stddev > 0.0))
        throw std::invalid_argument("weights: gaussian stddev must be > 0");
    if (signed_mode != SignedMode::None && !std::holds_alternative<UnitWeight>(weights))
        throw std::invalid_argument(
            "signed_mode replaces the weight draw and requires unit weights");
    for (const double value : sweep_values) check_point(model, params_for(*this, value));
}

WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials) {
    if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be >= 1");
    if (successes < 0 || successes > trials)
        throw std::invalid_argument("wilson_interval: successes must lie in [0, trials]");
    constexpr double z = 1.959964;  // two-sided 95% normal quantile
    const double nt = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nt;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nt;
    const double center = p + z2 / (2.0 * nt);
    const double half = z * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt));
    WilsonInterval ci;
    // Exact endpoints at the boundary; the formula leaves rounding dust there.
    ci.low = successes == 0 ? 0.0 : std::max(0.0, (center - half) / denom);
    ci.high = successes == trials ? 1.0 : std::min(1.0, (center + half) / denom);
    return ci;
}

SweepRow run_point(const ExperimentConfig& cfg, int point_index) {
    cfg.validate();
    if (point_index < 0 || point_index >= static_cast<int>(cfg.sweep_values.size()))
        throw std::invalid_argument("run_point: point_index out of range");
    const double value = cfg.sweep_values[point_index];
    const PointParams pp = params_for(cfg, value);

    // Integer accumulators keep the reduction associative, so the totals are
    // identical for every thread count.
    std::atomic<std::int64_t> successes{0}, errors{0}, disconnected{0}, edge_total{0};
    parallel_for(cfg.trials, cfg.threads, [&](std::int64_t begin, std::int64_t end) {
        std::int64_t ok = 0, bad = 0, split = 0, edges = 0;
        for (std::int64_t trial = begin; trial < end; ++trial) {
            const std::uint64_t trial_seed =
                derive_stream(cfg.seed.value, static_cast<std::uint64_t>(point_index),
                              static_cast<std::uint64_t>(trial));
            const Graph g = make_trial_graph(cfg, pp, trial_seed);
            edges += g.edge_count();
            if (!is_connected(g)) ++split;
            try {
                if (is_shift_enabled(g, cfg.shift_kind, cfg.tol_rel).enabled) ++ok;
            } catch (const Error&) {
                ++bad;  // precondition violation: counted as a failed trial
            }
        }
        successes += ok;
        errors += bad;
        disconnected += split;
        edge_total += edges;
    });

    SweepRow row;
    row.param_value = value;
    row.trials = cfg.trials;
    row.successes = successes.load();
    row.errors = errors.load();
    row.p_hat = static_cast<double>(row.successes) / static_cast<double>(row.trials);
    const WilsonInterval ci = wilson_interval(row.successes, row.trials);
    row.ci_low = ci.low;
    row.ci_high = ci.high;
    row.mean_edge_count =
        static_cast<double>(edge_total.load()) / static_cast<double>(row.trials);
    row.disconnect_fraction =
        static_cast<double>(disconnected.load()) / static_cast<double>(row.trials);
    return row;
}

SweepResult run_sweep(const ExperimentConfig& cfg, const ProgressFn& progress) {
    cfg.validate();
    SweepResult result;
    result.config = cfg;
    result.rows.reserve(cfg.sweep_values.size());
    for (int i = 0; i < static_cast<int>(cfg.sweep_values.size()); ++i) {
        result.rows.push_back(run_point(cfg, i));
        if (progress) progress(i, result.rows.back());
    }
    return result;
}

namespace {

std::string fmt9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

}  // namespace

void write_csv(std::ostream& out, const SweepResult& result) {
    const ExperimentConfig& cfg = result.config;
    out << "model,n,param_name,param_value,m_mean,shift_kind,weights,signed_mode,"
           "trials,successes,errors,p_hat,ci_low,ci_high,tol_rel,seed\n";
    for (const SweepRow& row : result.rows) {
        const int row_n = cfg.sweep_param == "n"
                              ? static_cast<int>(std::llround(row.param_value))
                              : cfg.n;
        out << to_string(cfg.model) << ',' << row_n << ',' << cfg.sweep_param << ','
            << fmt9(row.param_value) << ',' << fmt9(row.mean_edge_count) << ','
            << to_string(cfg.shift_kind) << ',' << to_string(cfg.weights) << ','
            << to_string(cfg.signed_mode) << ',' << row.trials << ',' << row.successes
            << ',' << row.errors << ',' << fmt9(row.p_hat) << ',' << fmt9(row.ci_low)
            << ',' << fmt9(row.ci_high) << ',' << fmt9(cfg.tol_rel) << ','
            << cfg.seed.value << '\n';
    }
}

}  // namespace shiftlab
