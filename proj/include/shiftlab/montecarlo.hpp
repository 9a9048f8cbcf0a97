#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "shiftlab/generators.hpp"
#include "shiftlab/graph.hpp"
#include "shiftlab/shift_matrix.hpp"
#include "shiftlab/spectral.hpp"

namespace shiftlab {

enum class GraphModel { ErGnm, ErGnp, Ws, Ba };

std::string_view to_string(GraphModel model);
GraphModel parse_graph_model(const std::string& text);  // er-gnm, er-gnp, ws, ba

enum class SignedMode {
    None,        // keep the weight distribution's output
    Balanced,    // random bipartition signing: +1 inside a side, -1 across
    Unbalanced,  // independent uniform +-1 per edge
};

std::string_view to_string(SignedMode mode);
SignedMode parse_signed_mode(const std::string& text);  // none, balanced, unbalanced

// One Monte Carlo experiment: a graph model with one swept parameter, a weight
// mode, a shift-matrix kind, and the sampling protocol. Fixed model parameters
// are taken from the fields below; the swept one is overridden per point by
// sweep_values.
struct ExperimentConfig {
    GraphModel model = GraphModel::ErGnm;

    int n = 20;
    std::int64_t m = 0;      // er-gnm edge count
    double p_edge = 0.5;     // er-gnp edge probability
    int k_half = 2;          // ws neighbors per side
    double beta = 0.1;       // ws rewiring probability
    int m0 = 1;              // ba initial vertices
    int m_per_node = 1;      // ba edges per added vertex

    // Which parameter sweep_values overrides: one of n, m, p, k_half, beta,
    // m0, m_per_node (as applicable to the model).
    std::string sweep_param;
    std::vector<double> sweep_values;

    WeightDistribution weights = UnitWeight{};
    SignedMode signed_mode = SignedMode::None;
    ShiftKind shift_kind = ShiftKind::Laplacian;
    std::int64_t trials = 10000;
    double tol_rel = kDefaultTolRel;
    RandomSeed seed;
    int threads = 0;  // 0 = SHIFTLAB_THREADS env var, else hardware concurrency

    // Throws std::invalid_argument naming the offending field; checks every
    // sweep point against the model's parameter ranges.
    void validate() const;
};

struct SweepRow {
    double param_value = 0.0;
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    std::int64_t errors = 0;  // trials that hit a shift-matrix precondition error
    double p_hat = 0.0;
    double ci_low = 0.0;   // 95% Wilson interval
    double ci_high = 0.0;
    double mean_edge_count = 0.0;
    double disconnect_fraction = 0.0;
};

struct SweepResult {
    ExperimentConfig config;
    std::vector<SweepRow> rows;  // one per sweep point, in sweep_values order
};

struct WilsonInterval {
    double low = 0.0;
    double high = 0.0;
};

// 95% Wilson score interval (z = 1.959964) for a binomial proportion.
WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials);

// Runs the trials of one sweep point. Each trial's seed is derived from
// (cfg.seed, point_index, trial index), so results are independent of thread
// count and execution order. A trial whose shift matrix violates a
// precondition (e.g. isolated vertex under the transition kind) counts as a
// failure and increments the row's error counter.
SweepRow run_point(const ExperimentConfig& cfg, int point_index);

using ProgressFn = std::function<void(int point_index, const SweepRow& row)>;

// All sweep points in order; byte-identical results for identical configs.
SweepResult run_sweep(const ExperimentConfig& cfg, const ProgressFn& progress = {});

// Stable CSV schema, one row per sweep point, floats at 9 significant digits:
// model,n,param_name,param_value,m_mean,shift_kind,weights,signed_mode,
// trials,successes,errors,p_hat,ci_low,ci_high,tol_rel,seed
void write_csv(std::ostream& out, const SweepResult& result);

}  // namespace shiftlab
