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
/// Seeded synthetic datasets. Every coordinate lies in [-1, 1] so it can be
/// fed to the angle encoding directly.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qcbp {

enum class Task { Regression, Classification };

struct Sample {
    std::vector<double> x;
    /// Regression target, or class label stored as 0.0 / 1.0.
    double target{0.0};

    bool operator==(const Sample &) const = default;
};

struct Dataset {
    std::vector<Sample> samples;
    Task task{Task::Regression};
    std::uint64_t seed{0};

    [[nodiscard]] std::size_t size() const noexcept { return samples.size(); }
    [[nodiscard]] unsigned feature_dim() const;
    bool operator==(const Dataset &) const = default;
};

enum class FunctionKind { Linear, Square, Sine };

FunctionKind parse_function_kind(std::string_view name);
std::string_view to_string(FunctionKind kind);

/// Noise-free target f(x): x, x^2 or sin x.
double target_function(FunctionKind kind, double x);

inline constexpr double kDefaultRegressionNoise = 0.015;
inline constexpr std::size_t kDefaultRegressionCount = 100;
inline constexpr double kDefaultInnerFactor = 0.5;

/// x ~ U[-1, 1], target = f(x) + noise_sigma * N(0, 1).
Dataset gen_function_dataset(FunctionKind kind, std::size_t count,
                             double noise_sigma, std::uint64_t seed);

/// Half the points on the unit circle (label 0), half on the circle of radius
/// inner_factor (label 1), uniform random angles, optional Gaussian jitter,
/// then min-max rescaled per coordinate into [-1, 1].
Dataset gen_circles(std::size_t count, double noise_sigma, double inner_factor,
                    std::uint64_t seed);

/// Pre-rescale point of a moons arc: arc 0 is (cos t, sin t), arc 1 is
/// (1 - cos t, 0.5 - sin t).
struct Point2 {
    double x1;
    double x2;
};
Point2 moon_point(int arc, double t);

/// Two interleaving half circles, t ~ U[0, pi]; arc 0 gets label 0 and arc 1
/// label 1. Jittered and rescaled like gen_circles.
Dataset gen_moons(std::size_t count, double noise_sigma, std::uint64_t seed);

/// Min-max rescale of every coordinate into [-1, 1].
void rescale_to_unit_box(std::vector<Sample> &samples);

/// Seeded shuffle, then the first round(fraction * size) samples go to the
/// first dataset.
std::pair<Dataset, Dataset> shuffle_split(const Dataset &dataset, double fraction,
                                          std::uint64_t seed);

/// Columns x1[,x2],target with a header row.
void write_csv(const Dataset &dataset, std::ostream &out);

} // namespace qcbp
