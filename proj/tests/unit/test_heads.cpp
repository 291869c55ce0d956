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
#include <numbers>

#include "qcbp/error.hpp"
#include "qcbp/gates.hpp"
#include "qcbp/heads.hpp"
#include "qcbp/random.hpp"

using namespace qcbp;
using Catch::Approx;

TEST_CASE("Regression output and loss", "[heads]") {
    CHECK(regression_output(QuantumState(3), RegressionHead{}) == 2.0);
    const QuantumState uniform =
        QuantumState::from_amplitudes({0.5, 0.5, 0.5, 0.5});
    CHECK(regression_output(uniform, RegressionHead{}) == Approx(0.0).margin(1e-15));
    const QuantumState tilted =
        apply_single_qubit(QuantumState(1), ry(std::numbers::pi / 3), QubitIndex{0});
    CHECK(regression_output(tilted, RegressionHead{}) == Approx(1.0).margin(1e-15));

    CHECK(mse_loss(1.0, 1.0) == 0.0);
    CHECK(mse_loss(0.0, 1.0) == 0.5);
    CHECK(mse_loss(2.0, -1.0) == 4.5);
}

TEST_CASE("Regression cotangent", "[heads]") {
    const auto c = regression_cotangent(QuantumState(1), 0.0, RegressionHead{});
    CHECK(c.dL_dp == std::vector<double>{4.0, -4.0});

    const auto zero = regression_cotangent(QuantumState(2), 2.0, RegressionHead{});
    for (double v : zero.dL_dp) {
        CHECK(v == 0.0);
    }

    // Measured qubit 1: sign follows bit 1 of the index.
    const auto q1 = regression_cotangent(QuantumState(2), 1.0, {QubitIndex{1}, 2.0});
    CHECK(q1.dL_dp == std::vector<double>{2.0, 2.0, -2.0, -2.0});
}

TEST_CASE("Softmax magnification at the reference expectations", "[heads]") {
    const ClassProbabilities g1 = softmax_gamma(0.3, 0.1, 1.0);
    CHECK(g1.y1 == Approx(0.55).margin(0.005));
    CHECK(g1.y2 == Approx(0.45).margin(0.005));
    const ClassProbabilities g3 = softmax_gamma(0.3, 0.1, 3.0);
    CHECK(g3.y1 == Approx(1.0 / (1.0 + std::exp(-0.6))).margin(1e-15));
    CHECK(g3.y1 == Approx(0.6457).margin(5e-5));
    const ClassProbabilities g5 = softmax_gamma(0.3, 0.1, 5.0);
    CHECK(g5.y1 == Approx(0.731).margin(0.005));
    CHECK(g5.y2 == Approx(0.269).margin(0.005));
    CHECK_THROWS_AS(softmax_gamma(0.3, 0.1, 0.0), DomainError);
}

TEST_CASE("Softmax invariants under random sweeps", "[heads][invariant]") {
    Rng rng(41);
    for (int i = 0; i < 10000; ++i) {
        const double z1 = rng.uniform(-1, 1);
        const double z2 = rng.uniform(-1, 1);
        const double g = rng.uniform(0.01, 20.0);
        const ClassProbabilities p = softmax_gamma(z1, z2, g);
        REQUIRE(std::abs(p.y1 + p.y2 - 1.0) < 1e-12);
        REQUIRE((p.y1 > p.y2) == (z1 > z2));
        if (z1 != z2) {
            const ClassProbabilities q = softmax_gamma(z1, z2, g * 1.5);
            REQUIRE(std::max(q.y1, q.y2) >= std::max(p.y1, p.y2));
        }
    }
}

TEST_CASE("Cross-entropy loss", "[heads]") {
    CHECK(cross_entropy_loss(1.0, 1) == Approx(0.0).margin(1e-11));
    CHECK(cross_entropy_loss(0.5, 1) == Approx(std::log(2.0)));
    CHECK(cross_entropy_loss(0.5, 0) == Approx(std::log(2.0)));
    CHECK(std::isfinite(cross_entropy_loss(0.0, 1)));
    CHECK(cross_entropy_loss(0.0, 1) == Approx(-std::log(1e-12)));
}

TEST_CASE("Classification cotangent", "[heads]") {
    // |00> gives z1 = z2 = 1, hence y1 = 0.5.
    const ClassificationHead head{};
    const auto c = classification_cotangent(QuantumState(2), 1, head);
    CHECK(c.dL_dp[0] == Approx(0.0).margin(1e-15));
    CHECK(c.dL_dp[1] == Approx(1.0));
    CHECK(c.dL_dp[2] == Approx(-1.0));
    CHECK(c.dL_dp[3] == Approx(0.0).margin(1e-15));

    const ClassProbabilities p = class_probabilities(QuantumState(2), head);
    CHECK(p.y1 == 0.5);

    const ClassificationHead same{QubitIndex{1}, QubitIndex{1}, 1.0};
    CHECK_THROWS_AS(same.validate(), DomainError);
}

TEST_CASE("Sample evaluation dispatches on the head", "[heads]") {
    const SampleEvaluation r = evaluate_sample(QuantumState(2), 0.0, RegressionHead{});
    CHECK(r.output == 2.0);
    CHECK(r.loss == 2.0);
    const SampleEvaluation c = evaluate_sample(QuantumState(2), 1.0, ClassificationHead{});
    CHECK(c.output == 0.5);
    CHECK(c.loss == Approx(std::log(2.0)));
    CHECK(sample_loss(QuantumState(2), 1.0, ClassificationHead{}).loss == c.loss);

    CHECK(predicted_label(0.51) == 1);
    CHECK(predicted_label(0.5) == 0);
    CHECK(highest_measured_qubit(ClassificationHead{QubitIndex{0}, QubitIndex{3}, 1.0}) == 3);
}
