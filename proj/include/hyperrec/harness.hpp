#ifndef HYPERREC_HARNESS_HPP
#define HYPERREC_HARNESS_HPP

// harness.hpp - config ingestion, seeded experiment sweeps, CSV emission
//
// A sweep runs trials_per_cell recovery trials on every grid cell
// (n outermost, then each class's exponent grid in declared order,
// rightmost fastest).  Trial t of cell c is seeded with
// derive_seed(base_seed, c, t), so results never depend on the thread
// count and reruns are byte-identical.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperrec/metrics.hpp"
#include "hyperrec/model.hpp"

namespace hyperrec {

struct ClassTemplate {
    int degree = 2;
    std::vector<double> exponents;  // grid of one or more values
    std::optional<double> probability_override;
};

struct ExperimentConfig {
    std::vector<int> n_grid;
    std::vector<ClassTemplate> classes;
    int target_degree = 0;
    int trials_per_cell = 1;
    uint64_t base_seed = 0;
    std::string output_path;  // empty = no file written

    void validate() const;
};

struct SweepClassInfo {
    int degree = 0;
    double exponent = 0.0;
    double probability = 0.0;
};

struct SweepRow {
    int n = 0;
    std::vector<SweepClassInfo> classes;
    int target_degree = 0;
    double delta_star = 0.0;
    double target_delta = 0.0;
    double p_target = 0.0;
    bool predicted_achievable = false;
    double margin = 0.0;
    int trials = 0;
    double mean_true_count = 0.0;
    double mean_ratio = 0.0;
    double mean_fp_rate = 0.0;
    double mean_fn_rate = 0.0;
    uint64_t seed = 0;  // the cell seed derive_seed(base_seed, cell_index)
};

// sample -> project -> recover(target degree) -> report against the
// sampled class.  Deterministic given seed.
RecoveryReport run_trial(const ModelParams& params, int target_index, uint64_t seed);

// The fully expanded grid cells of a config, in row order.
std::vector<ModelParams> expand_cells(const ExperimentConfig& config);

// One row per cell; writes CSV to config.output_path unless empty.
// threads <= 0 picks the hardware concurrency.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config, int threads = 0);

// Header: n,target_d,delta_star,target_delta,p_target,predicted_achievable,
// margin,trials,mean_true_count,mean_ratio,mean_fp_rate,mean_fn_rate,seed
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);

// JSON ingestion.  Model params: {"n": .., "classes": [{"degree": ..,
// "exponent": .., "probability_override"?: ..}, ..]}.  Experiment config
// additionally takes n_grid, target_degree, trials_per_cell, base_seed,
// output_path, and per-class either "exponent" or "exponent_grid".
ModelParams parse_model_params_json(const std::string& text);
ModelParams load_model_params(const std::string& path);
ExperimentConfig parse_experiment_config_json(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

}  // namespace hyperrec

#endif
