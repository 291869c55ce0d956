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

#include <vector>

#include "qcbp/gates.hpp"
#include "qcbp/kernels.hpp"
#include "qcbp/random.hpp"

using namespace qcbp;

namespace {

std::vector<Complex> random_amplitudes(std::size_t dim, Rng &rng) {
    std::vector<Complex> v(dim);
    for (auto &a : v) {
        a = {rng.normal(), rng.normal()};
    }
    return v;
}

} // namespace

// min_parallel_dim = 0 forces the OpenMP path even on tiny states.
TEST_CASE("Parallel kernels reproduce the serial reference bitwise", "[kernels]") {
    Rng rng(17);
    for (unsigned n : {1U, 2U, 5U, 10U, 15U}) {
        const std::size_t dim = std::size_t{1} << n;
        const auto base = random_amplitudes(dim, rng);
        const auto cot = random_amplitudes(dim, rng);
        const GateMatrix2 g = rz(rng.uniform(-3, 3)) * ry(rng.uniform(-3, 3));

        for (unsigned q = 0; q < n; ++q) {
            auto a = base;
            auto b = base;
            kernels::serial::apply_1q(a, g, q);
            kernels::parallel::apply_1q(b, g, q, 0);
            REQUIRE(a == b);

            const auto ms = kernels::serial::marginal(base, q);
            const auto mp = kernels::parallel::marginal(base, q, 0);
            const double bs = kernels::serial::bilinear_re(cot, base, g, q);
            const double bp = kernels::parallel::bilinear_re(cot, base, g, q, 0);
            if (dim <= kernels::kReductionBlock) {
                REQUIRE(ms == mp);
                REQUIRE(bs == bp);
            } else {
                // Block partials are summed in a different association.
                REQUIRE(ms[0] == Catch::Approx(mp[0]).epsilon(1e-12));
                REQUIRE(ms[1] == Catch::Approx(mp[1]).epsilon(1e-12));
                REQUIRE(bs == Catch::Approx(bp).epsilon(1e-10));
            }

            if (n >= 2) {
                const unsigned other = (q + 1) % n;
                auto c = base;
                auto d = base;
                kernels::serial::apply_cz(c, q, other);
                kernels::parallel::apply_cz(d, q, other, 0);
                REQUIRE(c == d);
            }
        }

        std::vector<double> ps(dim), pp(dim);
        kernels::serial::probabilities(base, ps);
        kernels::parallel::probabilities(base, pp, 0);
        REQUIRE(ps == pp);

        std::vector<double> w(dim);
        for (auto &x : w) {
            x = rng.normal();
        }
        std::vector<Complex> ws(dim), wp(dim);
        kernels::serial::weighted_conj(w, base, ws);
        kernels::parallel::weighted_conj(w, base, wp, 0);
        REQUIRE(ws == wp);
    }
}

TEST_CASE("Blocked reductions do not depend on the thread count", "[kernels]") {
    Rng rng(3);
    const auto amps = random_amplitudes(std::size_t{1} << 16, rng);
    const auto reference = kernels::parallel::marginal(amps, 7, 0);
    for (int threads : {1, 2, 4}) {
        kernels::ThreadScope scope(threads);
        REQUIRE(kernels::parallel::marginal(amps, 7, 0) == reference);
    }
}

TEST_CASE("Pair enumeration covers every index once", "[kernels]") {
    for (unsigned q = 0; q < 4; ++q) {
        std::vector<int> seen(16, 0);
        for (std::size_t k = 0; k < 8; ++k) {
            const std::size_t i0 = kernels::insert_zero_bit(k, q);
            ++seen[i0];
            ++seen[i0 | (std::size_t{1} << q)];
            CHECK(((i0 >> q) & 1U) == 0);
        }
        for (int s : seen) {
            CHECK(s == 1);
        }
    }
}

TEST_CASE("Kernel results match direct formulas", "[kernels]") {
    std::vector<Complex> amps{0.5, Complex(0, 0.5), -0.5, Complex(0.5, 0)};
    const auto m = kernels::serial::marginal(amps, 1);
    CHECK(m[0] == 0.5);
    CHECK(m[1] == 0.5);

    std::vector<Complex> cz = amps;
    kernels::serial::apply_cz(cz, 0, 1);
    CHECK(cz[3] == Complex(-0.5, 0));
    CHECK(cz[2] == amps[2]);

    // Re sum conj(a) ... as used by the gradient: 2x2 identity gives Re<cot|psi>.
    const std::vector<Complex> cot{1.0, 0.0, 0.0, Complex(0, 1)};
    const double re = kernels::serial::bilinear_re(cot, amps, GateMatrix2::identity(), 0);
    double expect = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        expect += (cot[j] * amps[j]).real();
    }
    CHECK(re == expect);
}
