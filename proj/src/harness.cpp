#include "hyperrec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hyperrec/estimator.hpp"
#include "hyperrec/seeding.hpp"
#include "hyperrec/text.hpp"

namespace hyperrec {

void ExperimentConfig::validate() const {
    if (n_grid.empty()) throw std::invalid_argument("config: n_grid must be nonempty");
    if (classes.empty()) throw std::invalid_argument("config: classes must be nonempty");
    if (trials_per_cell < 1) throw std::invalid_argument("config: trials_per_cell must be >= 1");
    int prev = 1;
    bool target_found = false;
    for (const auto& c : classes) {
        if (c.degree <= prev) throw std::invalid_argument("config: class degrees must be strictly increasing");
        if (c.exponents.empty()) throw std::invalid_argument("config: class exponent grid must be nonempty");
        for (double d : c.exponents)
            if (!(d > 0.0 && d < 1.0))
                throw std::invalid_argument("config: exponents must lie in (0, 1)");
        if (c.degree == target_degree) target_found = true;
        prev = c.degree;
    }
    if (!target_found) throw std::invalid_argument("config: target_degree matches no class");
    if (target_degree < 3) throw std::invalid_argument("theorem requires d_j >= 3");
    for (int n : n_grid)
        if (n < classes.back().degree)
            throw std::invalid_argument("config: every n must be >= the largest class degree");
}

RecoveryReport run_trial(const ModelParams& params, int target_index, uint64_t seed) {
    params.validate();
    if (target_index < 0 || target_index >= static_cast<int>(params.classes.size()))
        throw std::invalid_argument("run trial: target index out of range");
    const int d = params.classes[target_index].degree;
    if (d < 3) throw std::invalid_argument("theorem requires d_j >= 3");
    Hypergraph h = sample_hypergraph(params, seed);
    ProjectedGraph g = project(h);
    CliqueSet est = recover(g, d);
    return recovery_report(h.classes[target_index].edges, est);
}

std::vector<ModelParams> expand_cells(const ExperimentConfig& config) {
    config.validate();
    std::vector<ModelParams> cells;
    const size_t k = config.classes.size();
    for (int n : config.n_grid) {
        std::vector<size_t> idx(k, 0);
        bool done = false;
        while (!done) {
            ModelParams p;
            p.n = n;
            for (size_t i = 0; i < k; ++i) {
                DegreeClassSpec spec;
                spec.degree = config.classes[i].degree;
                spec.exponent = config.classes[i].exponents[idx[i]];
                spec.probability_override = config.classes[i].probability_override;
                p.classes.push_back(spec);
            }
            cells.push_back(std::move(p));
            // odometer, rightmost class fastest
            done = true;
            for (size_t i = k; i-- > 0;) {
                if (++idx[i] < config.classes[i].exponents.size()) {
                    done = false;
                    break;
                }
                idx[i] = 0;
            }
        }
    }
    return cells;
}

namespace {

SweepRow aggregate_cell(const ModelParams& params, int target_index, int target_degree,
                        const std::vector<RecoveryReport>& reports, uint64_t cell_seed) {
    SweepRow row;
    row.n = params.n;
    for (const auto& spec : params.classes)
        row.classes.push_back({spec.degree, spec.exponent, edge_probability(params.n, spec)});
    row.target_degree = target_degree;
    row.target_delta = params.classes[target_index].exponent;
    row.p_target = row.classes[target_index].probability;
    row.delta_star = 0.0;
    for (const auto& spec : params.classes) row.delta_star = std::max(row.delta_star, spec.exponent);
    Achievability a = achievability_predicate(params, target_index);
    row.predicted_achievable = a.achievable;
    row.margin = a.margin;
    row.trials = static_cast<int>(reports.size());
    double sum_true = 0, sum_ratio = 0, sum_fp = 0, sum_fn = 0;
    for (const auto& r : reports) {
        sum_true += static_cast<double>(r.true_count);
        sum_ratio += r.ratio;
        sum_fp += static_cast<double>(r.false_positives);
        sum_fn += static_cast<double>(r.false_negatives);
    }
    const double t = static_cast<double>(row.trials);
    row.mean_true_count = sum_true / t;
    row.mean_ratio = sum_ratio / t;
    row.mean_fp_rate = sum_fp / t;
    row.mean_fn_rate = sum_fn / t;
    row.seed = cell_seed;
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ExperimentConfig& config, int threads) {
    config.validate();
    const std::vector<ModelParams> cells = expand_cells(config);
    const int trials = config.trials_per_cell;
    const size_t jobs = cells.size() * static_cast<size_t>(trials);

    std::vector<int> target_index(cells.size());
    for (size_t c = 0; c < cells.size(); ++c)
        target_index[c] = cells[c].class_index(config.target_degree);

    std::vector<std::vector<RecoveryReport>> reports(cells.size(),
                                                     std::vector<RecoveryReport>(trials));
    int t = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (static_cast<size_t>(t) > jobs) t = static_cast<int>(jobs);

    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (;;) {
            size_t j = next.fetch_add(1);
            if (j >= jobs) return;
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (failure) return;
            }
            const size_t c = j / trials;
            const int trial = static_cast<int>(j % trials);
            try {
                uint64_t seed = derive_seed(config.base_seed, c, static_cast<uint64_t>(trial));
                reports[c][trial] = run_trial(cells[c], target_index[c], seed);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (t == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < t; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<SweepRow> rows;
    rows.reserve(cells.size());
    for (size_t c = 0; c < cells.size(); ++c)
        rows.push_back(aggregate_cell(cells[c], target_index[c], config.target_degree, reports[c],
                                      derive_seed(config.base_seed, c)));

    if (!config.output_path.empty()) {
        std::ofstream out(config.output_path);
        if (!out) throw std::runtime_error("unwritable output path: " + config.output_path);
        write_sweep_csv(out, rows);
        if (!out) throw std::runtime_error("unwritable output path: " + config.output_path);
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "n,target_d,delta_star,target_delta,p_target,predicted_achievable,margin,trials,"
           "mean_true_count,mean_ratio,mean_fp_rate,mean_fn_rate,seed\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.target_degree << ',' << format_double(r.delta_star) << ','
            << format_double(r.target_delta) << ',' << format_double(r.p_target) << ','
            << (r.predicted_achievable ? "true" : "false") << ',' << format_double(r.margin) << ','
            << r.trials << ',' << format_double(r.mean_true_count) << ','
            << format_double(r.mean_ratio) << ',' << format_double(r.mean_fp_rate) << ','
            << format_double(r.mean_fn_rate) << ',' << r.seed << "\n";
    }
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream s;
    write_sweep_csv(s, rows);
    return s.str();
}

namespace {

using nlohmann::json;

DegreeClassSpec class_spec_from_json(const json& j) {
    DegreeClassSpec spec;
    spec.degree = j.at("degree").get<int>();
    spec.exponent = j.at("exponent").get<double>();
    if (j.contains("probability_override"))
        spec.probability_override = j.at("probability_override").get<double>();
    return spec;
}

json parse_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& ex) {
        throw std::runtime_error(std::string(what) + " parse: " + ex.what());
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

ModelParams parse_model_params_json(const std::string& text) {
    json j = parse_text(text, "model params");
    try {
        ModelParams p;
        p.n = j.at("n").get<int>();
        for (const auto& c : j.at("classes")) p.classes.push_back(class_spec_from_json(c));
        p.validate();
        return p;
    } catch (const json::exception& ex) {
        throw std::runtime_error(std::string("model params parse: ") + ex.what());
    }
}

ModelParams load_model_params(const std::string& path) {
    return parse_model_params_json(slurp(path));
}

ExperimentConfig parse_experiment_config_json(const std::string& text) {
    json j = parse_text(text, "experiment config");
    try {
        ExperimentConfig cfg;
        for (const auto& n : j.at("n_grid")) cfg.n_grid.push_back(n.get<int>());
        for (const auto& c : j.at("classes")) {
            ClassTemplate t;
            t.degree = c.at("degree").get<int>();
            const bool single = c.contains("exponent");
            const bool grid = c.contains("exponent_grid");
            if (single == grid)
                throw std::runtime_error(
                    "experiment config parse: each class needs exactly one of exponent / exponent_grid");
            if (single) t.exponents.push_back(c.at("exponent").get<double>());
            else
                for (const auto& d : c.at("exponent_grid")) t.exponents.push_back(d.get<double>());
            if (c.contains("probability_override"))
                t.probability_override = c.at("probability_override").get<double>();
            cfg.classes.push_back(std::move(t));
        }
        cfg.target_degree = j.at("target_degree").get<int>();
        cfg.trials_per_cell = j.at("trials_per_cell").get<int>();
        cfg.base_seed = j.at("base_seed").get<uint64_t>();
        if (j.contains("output_path")) cfg.output_path = j.at("output_path").get<std::string>();
        cfg.validate();
        return cfg;
    } catch (const json::exception& ex) {
        throw std::runtime_error(std::string("experiment config parse: ") + ex.what());
    }
}

ExperimentConfig load_experiment_config(const std::string& path) {
    return parse_experiment_config_json(slurp(path));
}

}  // namespace hyperrec
