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
#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "qcbp/bench.hpp"
#include "qcbp/data.hpp"
#include "qcbp/error.hpp"

using namespace qcbp;
using Catch::Approx;

TEST_CASE("Median and affine fit", "[bench]") {
    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
    CHECK_THROWS_AS(median({}), DomainError);

    const LinearFit exact = fit_affine({1, 2, 3, 4}, {3, 5, 7, 9});
    CHECK(exact.slope == Approx(2.0));
    CHECK(exact.intercept == Approx(1.0));
    CHECK(exact.max_relative_deviation == Approx(0.0).margin(1e-12));

    const LinearFit bent = fit_affine({1, 2, 3}, {1, 4, 9});
    CHECK(bent.max_relative_deviation > 0.1);
    CHECK_THROWS_AS(fit_affine({1.0}, {1.0}), DomainError);
    CHECK_THROWS_AS(fit_affine({1.0, 1.0}, {1.0, 2.0}), DomainError);
}

TEST_CASE("Benchmark grid shape and CSV", "[bench]") {
    const Dataset d = gen_moons(20, 0.0, 1);
    BenchOptions opts;
    opts.iterations = 2;
    opts.repeats = 1;
    opts.fixed_qubits = 2;
    opts.fixed_depth = 1;
    const std::vector<GradientMethod> methods{
        GradientMethod::Backprop, GradientMethod::FiniteDifference, GradientMethod::Spsa};
    const auto records = run_benchmark(methods, {1, 2}, {2, 3, 1}, d, TrainConfig{}, opts);
    REQUIRE(records.size() == 3 * (2 + 3));

    CHECK(records[0].method == GradientMethod::Backprop);
    CHECK(records[0].n_qubits == 2);
    CHECK(records[0].depth_l == 1);
    CHECK(records[1].depth_l == 2);
    CHECK(records[1].n_params == 12);
    CHECK(records[3].n_qubits == 3);
    CHECK(records[5].method == GradientMethod::FiniteDifference);

    // n = 1 cannot hold two features: recorded as a failed cell.
    CHECK(records[4].failed);
    CHECK(std::isnan(records[4].seconds_per_100_iterations));
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i % 5 != 4) {
            CHECK_FALSE(records[i].failed);
            CHECK(records[i].seconds_per_100_iterations > 0.0);
        }
    }

    std::ostringstream out;
    write_csv(records, out);
    const std::string text = out.str();
    CHECK(text.rfind("method,n_qubits,depth_l,n_params,seconds_per_100_iters\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 16);
    CHECK(text.find("backprop,1,1,4,nan\n") != std::string::npos);

    CHECK_THROWS_AS(run_benchmark({}, {1}, {}, d, TrainConfig{}, opts), DomainError);
    CHECK_THROWS_AS(run_benchmark(methods, {1}, {}, gen_function_dataset(FunctionKind::Sine, 4, 0, 1),
                                  TrainConfig{}, opts),
                    DomainError);
}

TEST_CASE("Backprop outpaces finite differences on a deep circuit", "[bench]") {
    const Dataset d = gen_moons(20, 0.0, 1);
    BenchOptions opts;
    opts.iterations = 3;
    opts.repeats = 3;
    const auto records = run_benchmark(
        {GradientMethod::Backprop, GradientMethod::FiniteDifference}, {10}, {}, d, TrainConfig{}, opts);
    REQUIRE(records.size() == 2);
    CHECK(records[0].seconds_per_100_iterations * 10.0 < records[1].seconds_per_100_iterations);
}
