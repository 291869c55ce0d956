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
#include <limits>
#include <numbers>

#include "qcbp/error.hpp"
#include "qcbp/gates.hpp"
#include "qcbp/random.hpp"

using namespace qcbp;

namespace {

constexpr double pi = std::numbers::pi;
const Complex I{0.0, 1.0};

double diff(const GateMatrix2 &a, const GateMatrix2 &b) { return max_abs_diff(a, b); }

GateMatrix2 make(Complex a, Complex b, Complex c, Complex d) {
    return GateMatrix2{{a, b, c, d}};
}

GateMatrix2 central(GateMatrix2 (*g)(double), double theta, double h) {
    return (1.0 / (2.0 * h)) * (g(theta + h) - g(theta - h));
}

} // namespace

TEST_CASE("RY at reference angles", "[gates]") {
    CHECK(diff(ry(0.0), GateMatrix2::identity()) == 0.0);
    CHECK(diff(ry(pi), make(0, -1, 1, 0)) < 1e-15);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(diff(ry(pi / 2), make(r, -r, r, r)) < 1e-15);
}

TEST_CASE("RZ at reference angles", "[gates]") {
    CHECK(diff(rz(0.0), GateMatrix2::identity()) == 0.0);
    CHECK(diff(rz(pi), make(-I, 0, 0, I)) < 1e-15);
    CHECK(diff(rz(2 * pi), make(-1, 0, 0, -1)) < 1e-15);
}

TEST_CASE("Gate derivatives at reference angles", "[gates]") {
    CHECK(diff(d_ry(0.0), make(0, -0.5, 0.5, 0)) < 1e-15);
    CHECK(diff(d_ry(pi), make(-0.5, 0, 0, -0.5)) < 1e-15);
    CHECK(diff(d_rz(0.0), make(-0.5 * I, 0, 0, 0.5 * I)) < 1e-15);
    CHECK(diff(d_rz(pi), make(-0.5, 0, 0, -0.5)) < 1e-15);
}

TEST_CASE("Gate derivatives agree with central differences", "[gates]") {
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        const double theta = rng.uniform(-10, 10);
        REQUIRE(diff(d_ry(theta), central(ry, theta, 1e-6)) < 1e-9);
        REQUIRE(diff(d_rz(theta), central(rz, theta, 1e-6)) < 1e-9);
    }
}

TEST_CASE("Rotations are unitary and RZ composes additively", "[gates]") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        const double a = rng.uniform(-10, 10);
        const double b = rng.uniform(-10, 10);
        REQUIRE(diff(adjoint(ry(a)) * ry(a), GateMatrix2::identity()) < 1e-12);
        REQUIRE(diff(adjoint(rz(a)) * rz(a), GateMatrix2::identity()) < 1e-12);
        REQUIRE(diff(rz(a) * rz(b), rz(a + b)) < 1e-12);
    }
}

TEST_CASE("Axis dispatch and input validation", "[gates]") {
    CHECK(rotation(RotationAxis::Y, 0.3) == ry(0.3));
    CHECK(rotation(RotationAxis::Z, 0.3) == rz(0.3));
    CHECK(d_rotation(RotationAxis::Y, 0.3) == d_ry(0.3));
    CHECK(d_rotation(RotationAxis::Z, 0.3) == d_rz(0.3));
    CHECK_THROWS_AS(ry(std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK_THROWS_AS(rz(std::numeric_limits<double>::infinity()), DomainError);
}
