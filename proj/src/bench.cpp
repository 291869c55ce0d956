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
#include "qcbp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <ostream>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "qcbp/error.hpp"
#include "qcbp/kernels.hpp"

namespace qcbp {

namespace {

struct Cell {
    BenchmarkRecord record;
    AnsatzSpec spec;
    std::vector<double> seconds;
};

Cell make_cell(GradientMethod method, const AnsatzSpec &spec) {
    Cell cell{{}, spec, {}};
    cell.record.method = method;
    cell.record.n_qubits = spec.n_qubits;
    cell.record.depth_l = spec.depth;
    cell.record.n_params = param_count(spec);
    return cell;
}

void time_once(Cell &cell, const Dataset &dataset, TrainConfig cfg,
               const BenchOptions &options) {
    cfg.method = cell.record.method;
    cfg.iterations = options.iterations + 1;
    try {
        TrainingSession session(dataset, cell.spec, ClassificationHead{}, cfg);
        session.step(); // warm-up
        const auto start = std::chrono::steady_clock::now();
        for (std::size_t it = 0; it < options.iterations; ++it) {
            session.step();
        }
        cell.seconds.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    } catch (const std::exception &e) {
        cell.record.failed = true;
        cell.record.error = e.what();
        cell.record.seconds_per_100_iterations = std::numeric_limits<double>::quiet_NaN();
    }
}

} // namespace

std::vector<BenchmarkRecord> run_benchmark(const std::vector<GradientMethod> &methods,
                                           const std::vector<unsigned> &depth_sweep,
                                           const std::vector<unsigned> &qubit_sweep,
                                           const Dataset &dataset,
                                           const TrainConfig &cfg,
                                           const BenchOptions &options) {
    if (methods.empty() || (depth_sweep.empty() && qubit_sweep.empty())) {
        throw DomainError("benchmark needs at least one method and one sweep point");
    }
    if (dataset.task != Task::Classification) {
        throw DomainError("benchmark runs on a classification dataset");
    }
    if (options.iterations == 0 || options.repeats == 0) {
        throw DomainError("benchmark needs iterations and repeats >= 1");
    }
    const kernels::ThreadScope threads(options.threads);
    const unsigned features = dataset.feature_dim();

    std::vector<Cell> cells;
    for (GradientMethod method : methods) {
        for (unsigned depth : depth_sweep) {
            cells.push_back(make_cell(method, {options.fixed_qubits, depth, features}));
        }
        for (unsigned qubits : qubit_sweep) {
            cells.push_back(make_cell(method, {qubits, options.fixed_depth, features}));
        }
    }
    for (std::size_t r = 0; r < options.repeats; ++r) {
        for (Cell &cell : cells) {
            if (!cell.record.failed) {
                time_once(cell, dataset, cfg, options);
            }
        }
    }

    std::vector<BenchmarkRecord> records;
    records.reserve(cells.size());
    for (Cell &cell : cells) {
        if (!cell.record.failed) {
            cell.record.seconds_per_100_iterations =
                median(std::move(cell.seconds)) * 100.0 /
                static_cast<double>(options.iterations);
        }
        records.push_back(std::move(cell.record));
    }
    return records;
}

void write_csv(const std::vector<BenchmarkRecord> &records, std::ostream &out) {
    out << "method,n_qubits,depth_l,n_params,seconds_per_100_iters\n";
    for (const BenchmarkRecord &r : records) {
        out << fmt::format("{},{},{},{},{}\n", to_string(r.method), r.n_qubits,
                           r.depth_l, r.n_params,
                           r.failed ? std::string("nan")
                                    : fmt::format("{}", r.seconds_per_100_iterations));
    }
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw DomainError("median of an empty set");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

LinearFit fit_affine(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw DomainError("fit_affine needs at least two paired points");
    }
    const auto n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) {
        throw DomainError("fit_affine needs distinct x values");
    }
    LinearFit fit{0.0, sxy / sxx, 0.0};
    fit.intercept = my - fit.slope * mx;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double predicted = fit.intercept + fit.slope * x[i];
        fit.max_relative_deviation = std::max(
            fit.max_relative_deviation, std::abs(y[i] - predicted) / std::abs(predicted));
    }
    return fit;
}

} // namespace qcbp
