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
#include "qcbp/kernels.hpp"

#include <complex>
#include <vector>

#ifdef QCBP_HAVE_OPENMP
#include <omp.h>
#endif

#include "kernel_ops.hpp"

namespace qcbp::kernels::parallel {

namespace {

using index_t = long long;

// Fixed-size blocks, summed in ascending order afterwards.
template <class BlockSum>
double blocked_sum(std::size_t count, std::size_t block, bool run_parallel,
                   BlockSum &&block_sum) {
    const std::size_t n_blocks = (count + block - 1) / block;
    if (n_blocks <= 1) {
        return block_sum(std::size_t{0}, count);
    }
    std::vector<double> partial(n_blocks, 0.0);
#pragma omp parallel for schedule(static) if (run_parallel)
    for (index_t b = 0; b < static_cast<index_t>(n_blocks); ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * block;
        const std::size_t end = begin + block < count ? begin + block : count;
        partial[static_cast<std::size_t>(b)] = block_sum(begin, end);
    }
    double acc = 0.0;
    for (double p : partial) {
        acc += p;
    }
    return acc;
}

} // namespace

void apply_1q(std::span<Complex> amps, const GateMatrix2 &gate, unsigned target,
              std::size_t min_parallel_dim) {
    if (amps.size() < min_parallel_dim) {
        serial::apply_1q(amps, gate, target);
        return;
    }
    const auto pairs = static_cast<index_t>(amps.size() / 2);
#pragma omp parallel for schedule(static) if (amps.size() >= min_parallel_dim)
    for (index_t k = 0; k < pairs; ++k) {
        detail::apply_pair(amps, gate, static_cast<std::size_t>(k), target);
    }
}

void apply_cz(std::span<Complex> amps, unsigned q0, unsigned q1,
              std::size_t min_parallel_dim) {
    if (amps.size() < min_parallel_dim) {
        serial::apply_cz(amps, q0, q1);
        return;
    }
    const unsigned lo = q0 < q1 ? q0 : q1;
    const unsigned hi = q0 < q1 ? q1 : q0;
    const auto quads = static_cast<index_t>(amps.size() / 4);
#pragma omp parallel for schedule(static) if (amps.size() >= min_parallel_dim)
    for (index_t k = 0; k < quads; ++k) {
        detail::negate_quad(amps, static_cast<std::size_t>(k), lo, hi);
    }
}

void probabilities(std::span<const Complex> amps, std::span<double> out,
                   std::size_t min_parallel_dim) {
    if (amps.size() < min_parallel_dim) {
        serial::probabilities(amps, out);
        return;
    }
    const auto dim = static_cast<index_t>(amps.size());
#pragma omp parallel for schedule(static) if (amps.size() >= min_parallel_dim)
    for (index_t j = 0; j < dim; ++j) {
        out[static_cast<std::size_t>(j)] =
            std::norm(amps[static_cast<std::size_t>(j)]);
    }
}

std::array<double, 2> marginal(std::span<const Complex> amps, unsigned qubit,
                               std::size_t min_parallel_dim) {
    const bool run_parallel = amps.size() >= min_parallel_dim;
    std::array<double, 2> sums{};
    for (std::size_t bit = 0; bit < 2; ++bit) {
        // Only amplitudes with the requested bit value contribute, so the
        // per-block summation order matches the serial scan.
        sums[bit] = blocked_sum(
            amps.size() / 2, kReductionBlock / 2, run_parallel,
            [&](std::size_t begin, std::size_t end) {
                double acc = 0.0;
                for (std::size_t k = begin; k < end; ++k) {
                    const std::size_t j =
                        insert_zero_bit(k, qubit) | (bit << qubit);
                    acc += std::norm(amps[j]);
                }
                return acc;
            });
    }
    return sums;
}

double bilinear_re(std::span<const Complex> cot, std::span<const Complex> state,
                   const GateMatrix2 &gate, unsigned target,
                   std::size_t min_parallel_dim) {
    return blocked_sum(state.size() / 2, kReductionBlock / 2,
                       state.size() >= min_parallel_dim,
                       [&](std::size_t begin, std::size_t end) {
                           double acc = 0.0;
                           for (std::size_t k = begin; k < end; ++k) {
                               acc += detail::bilinear_pair(cot, state, gate, k,
                                                            target);
                           }
                           return acc;
                       });
}

void weighted_conj(std::span<const double> weights,
                   std::span<const Complex> state, std::span<Complex> out,
                   std::size_t min_parallel_dim) {
    if (state.size() < min_parallel_dim) {
        serial::weighted_conj(weights, state, out);
        return;
    }
    const auto dim = static_cast<index_t>(state.size());
#pragma omp parallel for schedule(static) if (state.size() >= min_parallel_dim)
    for (index_t j = 0; j < dim; ++j) {
        const auto i = static_cast<std::size_t>(j);
        out[i] = weights[i] * std::conj(state[i]);
    }
}

} // namespace qcbp::kernels::parallel

namespace qcbp::kernels {

ThreadScope::ThreadScope(int threads) {
#ifdef QCBP_HAVE_OPENMP
    previous_ = omp_get_max_threads();
    if (threads > 0) {
        omp_set_num_threads(threads);
    }
#else
    (void)threads;
#endif
}

ThreadScope::~ThreadScope() {
#ifdef QCBP_HAVE_OPENMP
    omp_set_num_threads(previous_);
#endif
}

int max_threads() {
#ifdef QCBP_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace qcbp::kernels
