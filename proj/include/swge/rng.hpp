// Copyright 2026 The swge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWGE_RNG_HPP
#define SWGE_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace swge {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for one consumer of randomness. Every stream in the library is
/// derived as derive_seed(global_seed, purpose, id) so that work on one graph
/// never depends on which other graphs were processed before it.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view purpose, std::uint64_t id = 0) {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (const char c : purpose) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return splitmix64(splitmix64(seed ^ h) + id);
}

inline Rng make_rng(std::uint64_t seed, std::string_view purpose, std::uint64_t id = 0) {
    return Rng(derive_seed(seed, purpose, id));
}

// libstdc++'s distributions are not specified bit-for-bit by the standard;
// these two helpers are, so generated data is portable.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// Uniform integer in [0, bound). bound must be positive.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <typename Vec>
void shuffle(Vec& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_index(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace swge

#endif // SWGE_RNG_HPP
