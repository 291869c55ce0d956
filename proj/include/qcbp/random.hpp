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
/// Seeded random streams. The engine is std::mt19937_64 (fully specified by
/// the standard); the uniform and normal transforms are written out here so
/// the same seed yields the same numbers with any standard library.

#include <cstdint>
#include <random>

namespace qcbp {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    double uniform(double low, double high) {
        return low + (high - low) * uniform();
    }
    /// Standard normal via the Box-Muller transform (one value per call).
    double normal();
    /// +1 or -1 with equal probability.
    int rademacher() { return (engine_() >> 63) != 0 ? 1 : -1; }
    std::uint64_t next_u64() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

/// Mixes a base seed with a stream index so related streams do not overlap.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace qcbp
