// SPDX-License-Identifier: Apache-2.0
//
// aerial-d2d: stochastic-geometry toolkit for D2D-enabled aerial networks
// Copyright (C) 2026 The aerial-d2d authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef AERIAL_D2D_RNG_HPP
#define AERIAL_D2D_RNG_HPP

#include <cstdint>
#include <random>

namespace aerial_d2d {

// All sampling uses a 64-bit Mersenne Twister. Streams are never shared:
// every replicate gets its own engine seeded through derive_seed.
using Rng = std::mt19937_64;

// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Seed for stream `index` under `base_seed`:
//   mix64(mix64(base_seed) ^ mix64(index + 0x9e3779b97f4a7c15))
// Distinct indices give statistically independent streams, and the mapping
// does not depend on how replicates are scheduled across workers.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) noexcept;

Rng make_rng(std::uint64_t seed);

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng &rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace aerial_d2d

#endif
