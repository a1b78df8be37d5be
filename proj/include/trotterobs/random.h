// Copyright 2026 The trotterobs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TROTTEROBS_RANDOM_H
#define TROTTEROBS_RANDOM_H

#include <cstdint>
#include <random>

namespace trotterobs {

/// All stochastic code draws from std::mt19937_64, whose output sequence is
/// fixed by the C++ standard. The helpers below map raw 64-bit outputs to
/// numbers without going through std::*_distribution (whose algorithms are
/// implementation-defined), so seeded runs agree bit-for-bit across
/// toolchains.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Uniform double in the open interval (0, 1): ((bits >> 11) + 0.5) * 2^-53.
inline double uniform_open01(Rng &rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection sampling on the top bits.
inline std::uint64_t uniform_index(Rng &rng, std::uint64_t bound) {
    const std::uint64_t limit = bound == 0 ? 0 : (~std::uint64_t{0} - bound + 1) % bound;
    for (;;) {
        const std::uint64_t v = rng();
        if (v >= limit) {
            return v % bound;
        }
    }
}

}  // namespace trotterobs

#endif
