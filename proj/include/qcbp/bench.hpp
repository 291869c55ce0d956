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
#pragma once

/// @file
/// Wall-clock comparison of gradient methods over depth and qubit sweeps.

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcbp/data.hpp"
#include "qcbp/trainer.hpp"

namespace qcbp {

struct BenchmarkRecord {
    GradientMethod method{GradientMethod::Backprop};
    unsigned n_qubits{0};
    unsigned depth_l{0};
    std::size_t n_params{0};
    /// Median over repeats, normalised to 100 iterations. NaN when failed.
    double seconds_per_100_iterations{0.0};
    bool failed{false};
    std::string error;
};

struct BenchOptions {
    std::size_t iterations{100};
    std::size_t repeats{3};
    /// Qubit count used by the depth sweep.
    unsigned fixed_qubits{4};
    /// Depth used by the qubit sweep.
    unsigned fixed_depth{10};
    /// OpenMP threads for every cell; 0 leaves the runtime setting alone.
    int threads{1};
};

/// Times `iterations` gradient-descent steps per cell after one untimed
/// warm-up step. Cells run one after another: for each method the depth
/// sweep (at fixed_qubits) and then the qubit sweep (at fixed_depth). Only
/// the steps are timed; data generation and initialisation are not.
std::vector<BenchmarkRecord> run_benchmark(const std::vector<GradientMethod> &methods,
                                           const std::vector<unsigned> &depth_sweep,
                                           const std::vector<unsigned> &qubit_sweep,
                                           const Dataset &dataset,
                                           const TrainConfig &cfg,
                                           const BenchOptions &options = {});

/// Header `method,n_qubits,depth_l,n_params,seconds_per_100_iters`.
void write_csv(const std::vector<BenchmarkRecord> &records, std::ostream &out);

double median(std::vector<double> values);

/// Median wall time of `repeats` calls to `fn`, in seconds.
template <class Fn> double median_seconds(Fn &&fn, std::size_t repeats) {
    std::vector<double> samples;
    samples.reserve(repeats);
    for (std::size_t r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        samples.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count());
    }
    return median(std::move(samples));
}

/// Least-squares fit y = intercept + slope * x, with the largest relative
/// deviation |y - fit| / fit over the points.
struct LinearFit {
    double intercept;
    double slope;
    double max_relative_deviation;
};
LinearFit fit_affine(const std::vector<double> &x, const std::vector<double> &y);

} // namespace qcbp
