// Copyright 2026 The qcbp Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qcbp/cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qcbp/autodiff.hpp"
#include "qcbp/baseline_grads.hpp"
#include "qcbp/bench.hpp"
#include "qcbp/circuit.hpp"
#include "qcbp/cli/csv.hpp"
#include "qcbp/cli/manifest.hpp"
#include "qcbp/data.hpp"
#include "qcbp/error.hpp"
#include "qcbp/heads.hpp"
#include "qcbp/random.hpp"
#include "qcbp/trainer.hpp"

namespace qcbp::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::size_t kRegressionGridPoints = 201;
constexpr std::size_t kClassificationGridPoints = 101;

const TrainConfig kTrainDefaults{};

std::string default_out_dir(std::string_view command) {
    if (const char *env = std::getenv("QCBP_OUT_DIR"); env != nullptr && *env != '\0') {
        return (fs::path(env) / command).string();
    }
    return (fs::path("runs") / command).string();
}

fs::path prepare_dir(const std::string &dir) {
    fs::path path(dir);
    fs::create_directories(path);
    return path;
}

std::uint64_t init_seed_for(std::uint64_t seed) { return derive_seed(seed, 1); }

RunManifest make_manifest(std::string command, json config, json seeds,
                          std::vector<std::string> artifacts) {
    RunManifest m;
    m.command = std::move(command);
    m.config = std::move(config);
    m.seeds = std::move(seeds);
    m.artifacts = std::move(artifacts);
    m.artifacts.push_back("manifest.json");
    m.version = version_string();
    m.timestamp = iso8601_now();
    return m;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = count == 1 ? lo
                            : lo + (hi - lo) * static_cast<double>(i) /
                                       static_cast<double>(count - 1);
    }
    return out;
}

// "5:20:5" (inclusive range), "2,3,4" or a single value.
std::vector<unsigned> parse_sweep(const std::string &text) {
    std::vector<unsigned> out;
    auto to_uint = [&](const std::string &s) {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size() || v < 0) {
            throw DomainError("bad sweep value '" + s + "'");
        }
        return static_cast<unsigned>(v);
    };
    try {
        if (text.find(':') != std::string::npos) {
            std::vector<std::string> parts;
            std::stringstream ss(text);
            for (std::string p; std::getline(ss, p, ':');) {
                parts.push_back(p);
            }
            if (parts.size() != 3) {
                throw DomainError("sweep range must be start:stop:step");
            }
            const unsigned start = to_uint(parts[0]);
            const unsigned stop = to_uint(parts[1]);
            const unsigned step = to_uint(parts[2]);
            if (step == 0 || stop < start) {
                throw DomainError("sweep range must have step > 0 and stop >= start");
            }
            for (unsigned v = start; v <= stop; v += step) {
                out.push_back(v);
            }
        } else {
            std::stringstream ss(text);
            for (std::string p; std::getline(ss, p, ',');) {
                out.push_back(to_uint(p));
            }
        }
    } catch (const std::logic_error &) {
        throw DomainError("cannot parse sweep '" + text + "'");
    }
    if (out.empty()) {
        throw DomainError("sweep '" + text + "' is empty");
    }
    return out;
}

std::vector<double> parse_doubles(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(p, &used));
            if (used != p.size()) {
                throw DomainError("bad number '" + p + "'");
            }
        } catch (const std::logic_error &) {
            throw DomainError("bad number '" + p + "'");
        }
    }
    if (out.empty()) {
        throw DomainError("empty list '" + text + "'");
    }
    return out;
}

std::vector<GradientMethod> parse_methods(const std::string &text) {
    if (text == "all") {
        return {GradientMethod::Backprop, GradientMethod::FiniteDifference,
                GradientMethod::Spsa};
    }
    std::vector<GradientMethod> out;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) {
        out.push_back(parse_gradient_method(p));
    }
    if (out.empty()) {
        throw DomainError("no gradient methods given");
    }
    return out;
}

Dataset make_classification_dataset(const std::string &name, std::size_t samples,
                                    double noise, double inner_factor,
                                    std::uint64_t seed) {
    if (name == "circles") {
        return gen_circles(samples, noise, inner_factor, seed);
    }
    if (name == "moons") {
        return gen_moons(samples, noise, seed);
    }
    throw DomainError("unknown dataset '" + name + "'");
}

void write_metrics(const fs::path &path, std::string_view metric_name,
                   const TrainResult &result) {
    CsvWriter csv(path, {"iter", "loss", metric_name});
    for (std::size_t i = 0; i < result.loss_history.size(); ++i) {
        csv.row({static_cast<double>(i), result.loss_history[i],
                 result.metric_history[i]});
    }
    csv.row({static_cast<double>(result.loss_history.size()), result.final_loss,
             result.final_metric});
}

// ---------------------------------------------------------------- regress

struct RegressOptions {
    std::string target{"square"};
    unsigned qubits{3};
    unsigned depth{3};
    std::size_t samples{kDefaultRegressionCount};
    double noise{kDefaultRegressionNoise};
    double lr{kTrainDefaults.learning_rate};
    std::size_t iters{kTrainDefaults.iterations};
    std::uint64_t seed{0};
    std::string out_dir;
};

int cmd_regress(const RegressOptions &o, std::ostream &out) {
    const FunctionKind kind = parse_function_kind(o.target);
    const Dataset data = gen_function_dataset(kind, o.samples, o.noise, o.seed);
    const AnsatzSpec spec{o.qubits, o.depth, 1};
    const Head head = RegressionHead{};
    TrainConfig cfg;
    cfg.learning_rate = o.lr;
    cfg.iterations = o.iters;
    cfg.init_seed = init_seed_for(o.seed);

    const TrainResult result = train(data, spec, head, cfg);

    const fs::path dir = prepare_dir(o.out_dir);
    write_metrics(dir / "metrics.csv", "r_squared", result);

    std::vector<std::vector<double>> inputs;
    for (double x : linspace(-1.0, 1.0, kRegressionGridPoints)) {
        inputs.push_back({x});
    }
    for (const Sample &s : data.samples) {
        inputs.push_back(s.x);
    }
    const std::vector<double> preds = predict(inputs, spec, result.final_theta, head);
    CsvWriter csv(dir / "predictions.csv", {"set", "x", "y_true", "y_pred"});
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const bool grid = i < kRegressionGridPoints;
        const double x = inputs[i][0];
        const double truth =
            grid ? target_function(kind, x) : data.samples[i - kRegressionGridPoints].target;
        csv.row({grid ? "grid" : "train", format_number(x), format_number(truth),
                 format_number(preds[i])});
    }

    const json config{{"target", o.target}, {"qubits", o.qubits}, {"depth", o.depth},
                      {"samples", o.samples}, {"noise", o.noise}, {"lr", o.lr},
                      {"iters", o.iters},   {"seed", o.seed},     {"out-dir", o.out_dir}};
    make_manifest("regress", config,
                  {{"data", o.seed}, {"init", cfg.init_seed}},
                  {"metrics.csv", "predictions.csv"})
        .write(dir / "manifest.json");

    out << fmt::format("final loss: {:.6f}\nfinal R^2: {:.6f}\noutputs: {}\n",
                       result.final_loss, result.final_metric, dir.string());
    return kExitSuccess;
}

// --------------------------------------------------------------- classify

struct ClassifyOptions {
    std::string dataset{"circles"};
    unsigned qubits{4};
    unsigned depth{6};
    std::size_t samples{200};
    double gamma{1.0};
    double noise{0.0};
    double inner_factor{kDefaultInnerFactor};
    double lr{kTrainDefaults.learning_rate};
    std::size_t iters{kTrainDefaults.iterations};
    std::uint64_t seed{0};
    std::string out_dir;
};

int cmd_classify(const ClassifyOptions &o, std::ostream &out) {
    const Dataset data =
        make_classification_dataset(o.dataset, o.samples, o.noise, o.inner_factor, o.seed);
    const AnsatzSpec spec{o.qubits, o.depth, 2};
    TrainConfig cfg;
    cfg.learning_rate = o.lr;
    cfg.iterations = o.iters;
    cfg.gamma = o.gamma;
    cfg.init_seed = init_seed_for(o.seed);
    const Head head = ClassificationHead{QubitIndex{0}, QubitIndex{1}, o.gamma};

    const TrainResult result = train(data, spec, head, cfg);

    const fs::path dir = prepare_dir(o.out_dir);
    write_metrics(dir / "metrics.csv", "accuracy", result);

    const std::vector<double> axis = linspace(-1.0, 1.0, kClassificationGridPoints);
    std::vector<std::vector<double>> grid;
    grid.reserve(axis.size() * axis.size());
    for (double x1 : axis) {
        for (double x2 : axis) {
            grid.push_back({x1, x2});
        }
    }
    const std::vector<double> grid_y1 = predict(grid, spec, result.final_theta, head);
    {
        CsvWriter csv(dir / "grid.csv", {"x1", "x2", "y1"});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            csv.row({grid[i][0], grid[i][1], grid_y1[i]});
        }
    }

    std::vector<std::vector<double>> points;
    for (const Sample &s : data.samples) {
        points.push_back(s.x);
    }
    const std::vector<double> point_y1 = predict(points, spec, result.final_theta, head);
    {
        CsvWriter csv(dir / "points.csv", {"x1", "x2", "label", "y1", "predicted"});
        for (std::size_t i = 0; i < points.size(); ++i) {
            csv.row({points[i][0], points[i][1], data.samples[i].target, point_y1[i],
                     static_cast<double>(predicted_label(point_y1[i]))});
        }
    }

    const json config{{"dataset", o.dataset},
                      {"qubits", o.qubits},
                      {"depth", o.depth},
                      {"samples", o.samples},
                      {"gamma", o.gamma},
                      {"noise", o.noise},
                      {"inner-factor", o.inner_factor},
                      {"lr", o.lr},
                      {"iters", o.iters},
                      {"seed", o.seed},
                      {"out-dir", o.out_dir}};
    make_manifest("classify", config, {{"data", o.seed}, {"init", cfg.init_seed}},
                  {"metrics.csv", "grid.csv", "points.csv"})
        .write(dir / "manifest.json");

    out << fmt::format("final loss: {:.6f}\nfinal accuracy: {:.4f}\noutputs: {}\n",
                       result.final_loss, result.final_metric, dir.string());
    return kExitSuccess;
}

// -------------------------------------------------------------- gradcheck

struct GradcheckOptions {
    unsigned qubits{3};
    unsigned depth{3};
    std::size_t trials{50};
    std::uint64_t seed{0};
    double tolerance{1e-5};
    bool json_output{false};
    std::string out_dir;
};

int cmd_gradcheck(const GradcheckOptions &o, std::ostream &out, std::ostream &err) {
    if (!(o.tolerance >= 0.0)) {
        throw DomainError("tolerance must be non-negative");
    }
    // A coordinate passes when |bp - fd| <= max(0.01 * tol, tol * |fd|).
    double max_deviation = 0.0;
    double max_abs_error = 0.0;
    json failures = json::array();

    for (std::size_t t = 0; t < o.trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(o.seed, t);
        Rng rng(trial_seed);
        const bool classify = o.qubits >= 2 && t % 2 == 1;
        const AnsatzSpec spec{o.qubits, o.depth, classify ? 2U : 1U};
        ParameterVector theta(std::vector<double>(param_count(spec)));
        for (double &v : theta.values) {
            v = rng.uniform(0.0, 2.0 * std::numbers::pi);
        }
        std::vector<double> x(spec.feature_dim);
        for (double &v : x) {
            v = rng.uniform(-1.0, 1.0);
        }
        Head head = RegressionHead{};
        double target = rng.uniform(-2.0, 2.0);
        if (classify) {
            head = ClassificationHead{QubitIndex{0}, QubitIndex{1}, rng.uniform(0.5, 5.0)};
            target = rng.rademacher() > 0 ? 1.0 : 0.0;
        }

        const ForwardTape tape = forward(x, theta, spec);
        const SampleEvaluation eval = evaluate_sample(tape.final_state(), target, head);
        const GradientVector bp = backward(tape, eval.cotangent, spec);
        const LossFunction f = [&](const ParameterVector &th) {
            return sample_loss(simulate(x, th, spec), target, head).loss;
        };
        const GradientVector fd = finite_difference_grad(f, theta, kOracleStep);

        for (std::size_t m = 0; m < bp.size(); ++m) {
            const double abs_err = std::abs(bp[m] - fd[m]);
            const double deviation = abs_err / std::max(std::abs(fd[m]), 0.01);
            max_abs_error = std::max(max_abs_error, abs_err);
            max_deviation = std::max(max_deviation, deviation);
            if (!(deviation <= o.tolerance)) {
                failures.push_back({{"trial", t},
                                    {"seed", trial_seed},
                                    {"head", classify ? "classification" : "regression"},
                                    {"parameter", m},
                                    {"backprop", bp[m]},
                                    {"finite_difference", fd[m]},
                                    {"deviation", deviation}});
            }
        }
    }

    const bool passed = failures.empty();
    const json report{{"qubits", o.qubits},           {"depth", o.depth},
                      {"trials", o.trials},           {"seed", o.seed},
                      {"tolerance", o.tolerance},     {"max_deviation", max_deviation},
                      {"max_abs_error", max_abs_error}, {"passed", passed},
                      {"failures", failures}};

    const fs::path dir = prepare_dir(o.out_dir);
    {
        std::ofstream f(dir / "gradcheck.json", std::ios::binary | std::ios::trunc);
        f << report.dump(2) << '\n';
    }
    const json config{{"qubits", o.qubits}, {"depth", o.depth},
                      {"trials", o.trials}, {"seed", o.seed},
                      {"tolerance", o.tolerance}, {"json", o.json_output},
                      {"out-dir", o.out_dir}};
    make_manifest("gradcheck", config, {{"trials", o.seed}}, {"gradcheck.json"})
        .write(dir / "manifest.json");

    if (o.json_output) {
        out << report.dump(2) << '\n';
    } else {
        out << fmt::format("trials: {}\nmax deviation: {:.3e}\nmax abs error: {:.3e}\n"
                           "tolerance: {:.3e}\n{}\n",
                           o.trials, max_deviation, max_abs_error, o.tolerance,
                           passed ? "PASS" : "FAIL");
    }
    if (!passed) {
        const json &first = failures.front();
        err << fmt::format("gradient check failed: trial {} (seed {}) parameter {} "
                           "deviation {:.3e}\n",
                           first["trial"].get<std::size_t>(),
                           first["seed"].get<std::uint64_t>(),
                           first["parameter"].get<std::size_t>(),
                           first["deviation"].get<double>());
        return kExitNumeric;
    }
    return kExitSuccess;
}

// ------------------------------------------------------------------ bench

struct BenchCliOptions {
    std::string methods{"all"};
    std::string depth_sweep{"5:20:5"};
    std::string qubit_sweep{"2:6:1"};
    std::size_t samples{200};
    std::size_t iters{100};
    std::size_t repeats{3};
    int threads{1};
    double lr{kTrainDefaults.learning_rate};
    std::uint64_t seed{0};
    std::string out_dir;
};

int cmd_bench(const BenchCliOptions &o, std::ostream &out, std::ostream &err) {
    const std::vector<GradientMethod> methods = parse_methods(o.methods);
    const std::vector<unsigned> depths = parse_sweep(o.depth_sweep);
    const std::vector<unsigned> qubits = parse_sweep(o.qubit_sweep);
    const Dataset data = gen_moons(o.samples, 0.0, o.seed);

    TrainConfig cfg;
    cfg.learning_rate = o.lr;
    cfg.iterations = o.iters + 1;
    cfg.init_seed = init_seed_for(o.seed);
    BenchOptions bench;
    bench.iterations = o.iters;
    bench.repeats = o.repeats;
    bench.threads = o.threads;

    const std::vector<BenchmarkRecord> records =
        run_benchmark(methods, depths, qubits, data, cfg, bench);

    const fs::path dir = prepare_dir(o.out_dir);
    {
        std::ofstream f(dir / "bench.csv", std::ios::binary | std::ios::trunc);
        write_csv(records, f);
    }
    const json config{{"methods", o.methods}, {"depth-sweep", o.depth_sweep},
                      {"qubit-sweep", o.qubit_sweep}, {"samples", o.samples},
                      {"iters", o.iters},     {"repeats", o.repeats},
                      {"threads", o.threads}, {"lr", o.lr},
                      {"seed", o.seed},       {"out-dir", o.out_dir}};
    make_manifest("bench", config, {{"data", o.seed}, {"init", cfg.init_seed}},
                  {"bench.csv"})
        .write(dir / "manifest.json");

    bool any_failed = false;
    out << fmt::format("{:<18} {:>3} {:>3} {:>6} {:>14}\n", "method", "n", "l", "params",
                       "s/100 iters");
    for (const BenchmarkRecord &r : records) {
        out << fmt::format("{:<18} {:>3} {:>3} {:>6} {:>14.4f}\n", to_string(r.method),
                           r.n_qubits, r.depth_l, r.n_params, r.seconds_per_100_iterations);
        if (r.failed) {
            any_failed = true;
            err << fmt::format("cell {} n={} l={} failed: {}\n", to_string(r.method),
                               r.n_qubits, r.depth_l, r.error);
        }
    }
    out << "outputs: " << dir.string() << '\n';
    return any_failed ? kExitNumeric : kExitSuccess;
}

// ------------------------------------------------------------------ sweep

struct SweepOptions {
    std::string dataset{"moons"};
    unsigned qubits{4};
    std::string depths{"3,6,9"};
    std::string gammas{"1"};
    std::size_t samples{200};
    double noise{0.0};
    double inner_factor{kDefaultInnerFactor};
    double lr{kTrainDefaults.learning_rate};
    std::size_t iters{kTrainDefaults.iterations};
    std::uint64_t seed{0};
    std::string out_dir;
};

int cmd_sweep(const SweepOptions &o, std::ostream &out) {
    const std::vector<unsigned> depths = parse_sweep(o.depths);
    const std::vector<double> gammas = parse_doubles(o.gammas);
    const Dataset data =
        make_classification_dataset(o.dataset, o.samples, o.noise, o.inner_factor, o.seed);

    const fs::path dir = prepare_dir(o.out_dir);
    CsvWriter csv(dir / "sweep.csv", {"depth", "gamma", "n_params", "final_loss", "accuracy"});
    out << fmt::format("{:>5} {:>6} {:>10} {:>9}\n", "depth", "gamma", "loss", "accuracy");
    TrainConfig cfg;
    cfg.learning_rate = o.lr;
    cfg.iterations = o.iters;
    cfg.init_seed = init_seed_for(o.seed);
    for (unsigned depth : depths) {
        for (double gamma : gammas) {
            const AnsatzSpec spec{o.qubits, depth, 2};
            cfg.gamma = gamma;
            const TrainResult r = train(data, spec, ClassificationHead{}, cfg);
            csv.row({static_cast<double>(depth), gamma,
                     static_cast<double>(param_count(spec)), r.final_loss,
                     r.final_metric});
            out << fmt::format("{:>5} {:>6} {:>10.5f} {:>9.4f}\n", depth, gamma,
                               r.final_loss, r.final_metric);
        }
    }
    const json config{{"dataset", o.dataset}, {"qubits", o.qubits},
                      {"depths", o.depths},   {"gammas", o.gammas},
                      {"samples", o.samples}, {"noise", o.noise},
                      {"inner-factor", o.inner_factor},
                      {"lr", o.lr},           {"iters", o.iters},
                      {"seed", o.seed},       {"out-dir", o.out_dir}};
    make_manifest("sweep", config, {{"data", o.seed}, {"init", cfg.init_seed}},
                  {"sweep.csv"})
        .write(dir / "manifest.json");
    out << "outputs: " << dir.string() << '\n';
    return kExitSuccess;
}

// ---------------------------------------------------------------- dataset

struct DatasetOptions {
    std::string kind{"moons"};
    std::optional<std::size_t> samples;
    std::optional<double> noise;
    double inner_factor{kDefaultInnerFactor};
    std::uint64_t seed{0};
    std::string out_dir;
};

int cmd_dataset(const DatasetOptions &o, std::ostream &out) {
    Dataset data;
    std::size_t samples = 0;
    double noise = 0.0;
    if (o.kind == "circles" || o.kind == "moons") {
        samples = o.samples.value_or(200);
        noise = o.noise.value_or(0.0);
        data = make_classification_dataset(o.kind, samples, noise, o.inner_factor, o.seed);
    } else {
        samples = o.samples.value_or(kDefaultRegressionCount);
        noise = o.noise.value_or(kDefaultRegressionNoise);
        data = gen_function_dataset(parse_function_kind(o.kind), samples, noise, o.seed);
    }
    const fs::path dir = prepare_dir(o.out_dir);
    {
        std::ofstream f(dir / "dataset.csv", std::ios::binary | std::ios::trunc);
        write_csv(data, f);
    }
    const json config{{"kind", o.kind},   {"samples", samples},
                      {"noise", noise},   {"inner-factor", o.inner_factor},
                      {"seed", o.seed},   {"out-dir", o.out_dir}};
    make_manifest("dataset", config, {{"data", o.seed}}, {"dataset.csv"})
        .write(dir / "manifest.json");
    out << fmt::format("wrote {} samples to {}\n", data.size(),
                       (dir / "dataset.csv").string());
    return kExitSuccess;
}

// ------------------------------------------------------------------ replay

struct ReplayOptions {
    std::string manifest;
    std::string out_dir;
};

// --config is expanded before parsing; the option exists for --help only.
void add_config_option(CLI::App *sub) {
    sub->add_option("--config", "key=value file of defaults; command-line flags win");
}

bool has_flag(const std::vector<std::string> &args, const std::string &flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string &a) {
        return a == flag || a.rfind(flag + "=", 0) == 0;
    });
}

// Replaces "--config FILE" with the file's key=value pairs as flags, skipping
// keys the command line already sets.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::optional<std::string> path;
    for (auto it = args.begin(); it != args.end();) {
        if (*it == "--config") {
            if (std::next(it) == args.end()) {
                throw CLI::ArgumentMismatch("--config needs a file argument");
            }
            path = *std::next(it);
            it = args.erase(it, std::next(it, 2));
        } else if (it->rfind("--config=", 0) == 0) {
            path = it->substr(9);
            it = args.erase(it);
        } else {
            ++it;
        }
    }
    if (!path) {
        return args;
    }
    if (!fs::exists(*path)) {
        throw DomainError("config file '" + *path + "' not found");
    }
    const std::string command = args.empty() ? std::string() : args.front();
    std::vector<std::string> extra;
    for (const CLI::ConfigItem &item : CLI::ConfigINI().from_file(*path)) {
        if (!item.parents.empty() && item.parents != std::vector<std::string>{command}) {
            continue;
        }
        const std::string flag = "--" + item.name;
        if (item.name.empty() || item.name == "++" || item.name == "--" ||
            has_flag(args, flag)) {
            continue;
        }
        if (item.inputs.size() == 1 && item.inputs.front() == "true") {
            extra.push_back(flag);
            continue;
        }
        if (item.inputs.size() == 1 && item.inputs.front() == "false") {
            continue;
        }
        extra.push_back(flag);
        std::string joined;
        for (const std::string &v : item.inputs) {
            joined += (joined.empty() ? "" : ",") + v;
        }
        extra.push_back(joined);
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

template <class T>
CLI::Option *add_out_dir(CLI::App *sub, T &opts, std::string_view command) {
    opts.out_dir = default_out_dir(command);
    return sub->add_option("--out-dir", opts.out_dir, "Output directory")
        ->capture_default_str();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Statevector simulator and backpropagation trainer for "
                 "parameterized quantum circuits",
                 "qcbp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version_string());

    std::function<int()> action;

    RegressOptions regress;
    {
        CLI::App *sub = app.add_subcommand("regress", "Fit a 1-D target function");
        add_config_option(sub);
        sub->add_option("--target", regress.target, "linear | square | sine")
            ->check(CLI::IsMember({"linear", "square", "sine"}))
            ->capture_default_str();
        sub->add_option("--qubits", regress.qubits)->capture_default_str();
        sub->add_option("--depth", regress.depth)->capture_default_str();
        sub->add_option("--samples", regress.samples)->capture_default_str();
        sub->add_option("--noise", regress.noise)->capture_default_str();
        sub->add_option("--lr", regress.lr)->capture_default_str();
        sub->add_option("--iters", regress.iters)->capture_default_str();
        sub->add_option("--seed", regress.seed)->capture_default_str();
        add_out_dir(sub, regress, "regress");
        sub->callback([&] { action = [&] { return cmd_regress(regress, out); }; });
    }

    ClassifyOptions classify;
    {
        CLI::App *sub = app.add_subcommand("classify", "Train a binary classifier on 2-D data");
        add_config_option(sub);
        sub->add_option("--dataset", classify.dataset, "circles | moons")
            ->check(CLI::IsMember({"circles", "moons"}))
            ->capture_default_str();
        sub->add_option("--qubits", classify.qubits)->capture_default_str();
        sub->add_option("--depth", classify.depth)->capture_default_str();
        sub->add_option("--samples", classify.samples)->capture_default_str();
        sub->add_option("--gamma", classify.gamma, "Softmax scale")->capture_default_str();
        sub->add_option("--noise", classify.noise)->capture_default_str();
        sub->add_option("--inner-factor", classify.inner_factor)->capture_default_str();
        sub->add_option("--lr", classify.lr)->capture_default_str();
        sub->add_option("--iters", classify.iters)->capture_default_str();
        sub->add_option("--seed", classify.seed)->capture_default_str();
        add_out_dir(sub, classify, "classify");
        sub->callback([&] { action = [&] { return cmd_classify(classify, out); }; });
    }

    GradcheckOptions gradcheck;
    {
        CLI::App *sub = app.add_subcommand(
            "gradcheck", "Compare backprop gradients with central finite differences");
        add_config_option(sub);
        sub->add_option("--qubits", gradcheck.qubits)->capture_default_str();
        sub->add_option("--depth", gradcheck.depth)->capture_default_str();
        sub->add_option("--trials", gradcheck.trials)->capture_default_str();
        sub->add_option("--seed", gradcheck.seed)->capture_default_str();
        sub->add_option("--tolerance", gradcheck.tolerance,
                        "Relative tolerance; absolute floor is 1% of it")
            ->capture_default_str();
        sub->add_flag("--json", gradcheck.json_output, "Print the report as JSON");
        add_out_dir(sub, gradcheck, "gradcheck");
        sub->callback([&] { action = [&] { return cmd_gradcheck(gradcheck, out, err); }; });
    }

    BenchCliOptions bench;
    {
        CLI::App *sub = app.add_subcommand("bench", "Time gradient methods over sweeps");
        add_config_option(sub);
        sub->add_option("--methods", bench.methods,
                        "all or a comma list of backprop,finite_difference,spsa")
            ->capture_default_str();
        sub->add_option("--depth-sweep", bench.depth_sweep, "start:stop:step or list")
            ->capture_default_str();
        sub->add_option("--qubit-sweep", bench.qubit_sweep, "start:stop:step or list")
            ->capture_default_str();
        sub->add_option("--samples", bench.samples)->capture_default_str();
        sub->add_option("--iters", bench.iters, "Timed iterations per cell")
            ->capture_default_str();
        sub->add_option("--repeats", bench.repeats)->capture_default_str();
        sub->add_option("--threads", bench.threads, "OpenMP threads (0 = runtime default)")
            ->capture_default_str();
        sub->add_option("--lr", bench.lr)->capture_default_str();
        sub->add_option("--seed", bench.seed)->capture_default_str();
        add_out_dir(sub, bench, "bench");
        sub->callback([&] { action = [&] { return cmd_bench(bench, out, err); }; });
    }

    SweepOptions sweep;
    {
        CLI::App *sub = app.add_subcommand("sweep", "Classification accuracy over depth and gamma");
        add_config_option(sub);
        sub->add_option("--dataset", sweep.dataset, "circles | moons")
            ->check(CLI::IsMember({"circles", "moons"}))
            ->capture_default_str();
        sub->add_option("--qubits", sweep.qubits)->capture_default_str();
        sub->add_option("--depths", sweep.depths, "start:stop:step or list")
            ->capture_default_str();
        sub->add_option("--gammas", sweep.gammas, "Comma list")->capture_default_str();
        sub->add_option("--samples", sweep.samples)->capture_default_str();
        sub->add_option("--noise", sweep.noise)->capture_default_str();
        sub->add_option("--inner-factor", sweep.inner_factor)->capture_default_str();
        sub->add_option("--lr", sweep.lr)->capture_default_str();
        sub->add_option("--iters", sweep.iters)->capture_default_str();
        sub->add_option("--seed", sweep.seed)->capture_default_str();
        add_out_dir(sub, sweep, "sweep");
        sub->callback([&] { action = [&] { return cmd_sweep(sweep, out); }; });
    }

    DatasetOptions dataset;
    {
        CLI::App *sub = app.add_subcommand("dataset", "Write a synthetic dataset as CSV");
        add_config_option(sub);
        sub->add_option("--kind", dataset.kind, "linear | square | sine | circles | moons")
            ->check(CLI::IsMember({"linear", "square", "sine", "circles", "moons"}))
            ->capture_default_str();
        sub->add_option("--samples", dataset.samples);
        sub->add_option("--noise", dataset.noise);
        sub->add_option("--inner-factor", dataset.inner_factor)->capture_default_str();
        sub->add_option("--seed", dataset.seed)->capture_default_str();
        add_out_dir(sub, dataset, "dataset");
        sub->callback([&] { action = [&] { return cmd_dataset(dataset, out); }; });
    }

    ReplayOptions replay;
    {
        CLI::App *sub = app.add_subcommand("replay", "Re-run a command from its manifest.json");
        sub->add_option("--manifest", replay.manifest)->required();
        sub->add_option("--out-dir", replay.out_dir)->required();
        sub->callback([&] {
            action = [&] {
                const RunManifest m = RunManifest::read(replay.manifest);
                if (m.command == "replay") {
                    throw DomainError("cannot replay a replay manifest");
                }
                std::vector<std::string> replay_args = m.replay_args();
                replay_args.push_back("--out-dir");
                replay_args.push_back(replay.out_dir);
                return run(replay_args, out, err);
            };
        });
    }

    std::vector<std::string> expanded;
    try {
        expanded = expand_config(args);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    std::vector<const char *> argv{"qcbp"};
    for (const std::string &a : expanded) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitSuccess;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kExitSuccess;
    } catch (const CLI::CallForVersion &e) {
        app.exit(e, out, err);
        return kExitSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const NumericError &e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace qcbp::cli
