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

#include <cstdio>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "qcbp/bench.hpp"
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

void report(const std::string &kernel, unsigned n, double serial, double parallel) {
    fmt::print("{:<14} {:>3} {:>12.3f} {:>12.3f} {:>8.2f}\n", kernel, n, serial * 1e3,
               parallel * 1e3, serial / parallel);
}

} // namespace

int main(int argc, char **argv) {
    const unsigned max_qubits = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 22;
    constexpr std::size_t repeats = 5;
    Rng rng(1);
    const GateMatrix2 gate = rz(0.3) * ry(1.1);

    fmt::print("OpenMP threads: {}\n", kernels::max_threads());
    fmt::print("{:<14} {:>3} {:>12} {:>12} {:>8}\n", "kernel", "n", "serial ms", "parallel ms",
               "speedup");
    for (unsigned n = 12; n <= max_qubits; n += 2) {
        const std::size_t dim = std::size_t{1} << n;
        auto amps = random_amplitudes(dim, rng);
        const auto cot = random_amplitudes(dim, rng);
        const unsigned target = n / 2;
        double sink = 0.0;

        report("apply_1q", n,
               median_seconds([&] { kernels::serial::apply_1q(amps, gate, target); }, repeats),
               median_seconds([&] { kernels::parallel::apply_1q(amps, gate, target); }, repeats));
        report("apply_cz", n,
               median_seconds([&] { kernels::serial::apply_cz(amps, 0, n - 1); }, repeats),
               median_seconds([&] { kernels::parallel::apply_cz(amps, 0, n - 1); }, repeats));
        report("marginal", n,
               median_seconds([&] { sink += kernels::serial::marginal(amps, target)[0]; }, repeats),
               median_seconds([&] { sink += kernels::parallel::marginal(amps, target)[0]; },
                              repeats));
        report("bilinear_re", n,
               median_seconds([&] { sink += kernels::serial::bilinear_re(cot, amps, gate, target); },
                              repeats),
               median_seconds(
                   [&] { sink += kernels::parallel::bilinear_re(cot, amps, gate, target); },
                   repeats));
        if (sink == 42.0) {
            std::puts("");
        }
    }
    return 0;
}
