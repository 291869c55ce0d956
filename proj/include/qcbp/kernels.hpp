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
/// Amplitude-level kernels. Two implementations are kept side by side:
/// `serial` is the reference used by tests, `parallel` splits the index
/// space across OpenMP threads. Gate applications touch disjoint index pairs
/// so both variants produce bit-identical amplitudes. Reductions in
/// `parallel` sum fixed-size blocks and then combine the block partials in
/// ascending order, so the result does not depend on the thread count and
/// equals the serial result whenever the input fits in a single block.

#include <array>
#include <cstddef>
#include <span>

#include "qcbp/gate_matrix.hpp"

namespace qcbp::kernels {

/// States smaller than this run the parallel kernels on one thread.
inline constexpr std::size_t kDefaultParallelDim = std::size_t{1} << 14;
/// Number of amplitudes per reduction block.
inline constexpr std::size_t kReductionBlock = std::size_t{1} << 13;

/// Index of the k-th amplitude whose bit `qubit` is zero.
constexpr std::size_t insert_zero_bit(std::size_t k, unsigned qubit) {
    const std::size_t low_mask = (std::size_t{1} << qubit) - 1;
    return ((k & ~low_mask) << 1) | (k & low_mask);
}

namespace serial {

void apply_1q(std::span<Complex> amps, const GateMatrix2 &gate, unsigned target);
void apply_cz(std::span<Complex> amps, unsigned q0, unsigned q1);
void probabilities(std::span<const Complex> amps, std::span<double> out);
/// (sum over bit = 0, sum over bit = 1) of |amp|^2.
std::array<double, 2> marginal(std::span<const Complex> amps, unsigned qubit);
/// Re sum_j cot[j] * (G_target state)[j], no conjugation of `cot`.
double bilinear_re(std::span<const Complex> cot, std::span<const Complex> state,
                   const GateMatrix2 &gate, unsigned target);
/// out[j] = weights[j] * conj(state[j]).
void weighted_conj(std::span<const double> weights,
                   std::span<const Complex> state, std::span<Complex> out);

} // namespace serial

namespace parallel {

void apply_1q(std::span<Complex> amps, const GateMatrix2 &gate, unsigned target,
              std::size_t min_parallel_dim = kDefaultParallelDim);
void apply_cz(std::span<Complex> amps, unsigned q0, unsigned q1,
              std::size_t min_parallel_dim = kDefaultParallelDim);
void probabilities(std::span<const Complex> amps, std::span<double> out,
                   std::size_t min_parallel_dim = kDefaultParallelDim);
std::array<double, 2> marginal(std::span<const Complex> amps, unsigned qubit,
                               std::size_t min_parallel_dim = kDefaultParallelDim);
double bilinear_re(std::span<const Complex> cot, std::span<const Complex> state,
                   const GateMatrix2 &gate, unsigned target,
                   std::size_t min_parallel_dim = kDefaultParallelDim);
void weighted_conj(std::span<const double> weights,
                   std::span<const Complex> state, std::span<Complex> out,
                   std::size_t min_parallel_dim = kDefaultParallelDim);

} // namespace parallel

/// Sets the OpenMP thread count for its lifetime; threads <= 0 keeps the
/// current setting. A no-op when built without OpenMP.
class ThreadScope {
  public:
    explicit ThreadScope(int threads);
    ~ThreadScope();
    ThreadScope(const ThreadScope &) = delete;
    ThreadScope &operator=(const ThreadScope &) = delete;

  private:
    int previous_{1};
};

/// Thread count the next parallel region would use (1 without OpenMP).
int max_threads();

} // namespace qcbp::kernels
