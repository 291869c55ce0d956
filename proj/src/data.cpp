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
#include "qcbp/data.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "qcbp/error.hpp"
#include "qcbp/random.hpp"

namespace qcbp {

unsigned Dataset::feature_dim() const {
    if (samples.empty()) {
        throw DomainError("dataset is empty");
    }
    return static_cast<unsigned>(samples.front().x.size());
}

FunctionKind parse_function_kind(std::string_view name) {
    if (name == "linear") {
        return FunctionKind::Linear;
    }
    if (name == "square") {
        return FunctionKind::Square;
    }
    if (name == "sine") {
        return FunctionKind::Sine;
    }
    throw DomainError("unknown target function '" + std::string(name) + "'");
}

std::string_view to_string(FunctionKind kind) {
    switch (kind) {
    case FunctionKind::Linear:
        return "linear";
    case FunctionKind::Square:
        return "square";
    case FunctionKind::Sine:
        return "sine";
    }
    return "unknown";
}

double target_function(FunctionKind kind, double x) {
    switch (kind) {
    case FunctionKind::Linear:
        return x;
    case FunctionKind::Square:
        return x * x;
    case FunctionKind::Sine:
        return std::sin(x);
    }
    return 0.0;
}

Dataset gen_function_dataset(FunctionKind kind, std::size_t count,
                             double noise_sigma, std::uint64_t seed) {
    if (count == 0) {
        throw DomainError("dataset needs at least one sample");
    }
    if (!(noise_sigma >= 0.0)) {
        throw DomainError("noise_sigma must be non-negative");
    }
    Rng rng(seed);
    Dataset out{{}, Task::Regression, seed};
    out.samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = rng.uniform(-1.0, 1.0);
        const double noise = noise_sigma * rng.normal();
        out.samples.push_back(Sample{{x}, target_function(kind, x) + noise});
    }
    return out;
}

void rescale_to_unit_box(std::vector<Sample> &samples) {
    if (samples.empty()) {
        return;
    }
    const std::size_t dim = samples.front().x.size();
    for (std::size_t d = 0; d < dim; ++d) {
        auto [lo_it, hi_it] = std::minmax_element(
            samples.begin(), samples.end(),
            [d](const Sample &a, const Sample &b) { return a.x[d] < b.x[d]; });
        const double lo = lo_it->x[d];
        const double hi = hi_it->x[d];
        const double span = hi - lo;
        for (Sample &s : samples) {
            s.x[d] = span > 0.0 ? std::clamp(-1.0 + 2.0 * (s.x[d] - lo) / span, -1.0, 1.0)
                                : 0.0;
        }
    }
}

namespace {

void check_even(std::size_t count) {
    if (count == 0 || count % 2 != 0) {
        throw DomainError("class-balanced datasets need a positive even count, got " +
                          std::to_string(count));
    }
}

} // namespace

Dataset gen_circles(std::size_t count, double noise_sigma, double inner_factor,
                    std::uint64_t seed) {
    check_even(count);
    if (!(inner_factor > 0.0 && inner_factor < 1.0)) {
        throw DomainError("inner_factor must lie in (0, 1)");
    }
    if (!(noise_sigma >= 0.0)) {
        throw DomainError("noise_sigma must be non-negative");
    }
    Rng rng(seed);
    Dataset out{{}, Task::Classification, seed};
    out.samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int label = i < count / 2 ? 0 : 1;
        const double radius = label == 0 ? 1.0 : inner_factor;
        const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        double x1 = radius * std::cos(angle);
        double x2 = radius * std::sin(angle);
        if (noise_sigma > 0.0) {
            x1 += noise_sigma * rng.normal();
            x2 += noise_sigma * rng.normal();
        }
        out.samples.push_back(Sample{{x1, x2}, static_cast<double>(label)});
    }
    rescale_to_unit_box(out.samples);
    return out;
}

Point2 moon_point(int arc, double t) {
    if (arc == 0) {
        return Point2{std::cos(t), std::sin(t)};
    }
    return Point2{1.0 - std::cos(t), 0.5 - std::sin(t)};
}

Dataset gen_moons(std::size_t count, double noise_sigma, std::uint64_t seed) {
    check_even(count);
    if (!(noise_sigma >= 0.0)) {
        throw DomainError("noise_sigma must be non-negative");
    }
    Rng rng(seed);
    Dataset out{{}, Task::Classification, seed};
    out.samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const int label = i < count / 2 ? 0 : 1;
        Point2 p = moon_point(label, rng.uniform(0.0, std::numbers::pi));
        if (noise_sigma > 0.0) {
            p.x1 += noise_sigma * rng.normal();
            p.x2 += noise_sigma * rng.normal();
        }
        out.samples.push_back(Sample{{p.x1, p.x2}, static_cast<double>(label)});
    }
    rescale_to_unit_box(out.samples);
    return out;
}

std::pair<Dataset, Dataset> shuffle_split(const Dataset &dataset, double fraction,
                                          std::uint64_t seed) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw DomainError("split fraction must lie in [0, 1]");
    }
    std::vector<Sample> shuffled = dataset.samples;
    Rng rng(seed);
    // Fisher-Yates with our own uniform draw so the order is portable.
    for (std::size_t i = shuffled.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform() * static_cast<double>(i));
        std::swap(shuffled[i - 1], shuffled[std::min(j, i - 1)]);
    }
    const auto cut = static_cast<std::size_t>(
        std::llround(fraction * static_cast<double>(shuffled.size())));
    Dataset first{{shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(cut)},
                  dataset.task, dataset.seed};
    Dataset second{{shuffled.begin() + static_cast<std::ptrdiff_t>(cut), shuffled.end()},
                   dataset.task, dataset.seed};
    return {std::move(first), std::move(second)};
}

void write_csv(const Dataset &dataset, std::ostream &out) {
    const unsigned dim = dataset.feature_dim();
    out << (dim == 2 ? "x1,x2,target\n" : "x1,target\n");
    for (const Sample &s : dataset.samples) {
        for (double v : s.x) {
            out << fmt::format("{},", v);
        }
        out << fmt::format("{}\n", s.target);
    }
}

} // namespace qcbp
