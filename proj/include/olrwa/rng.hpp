/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace olrwa {

/// Seeded generator with a fixed, platform-independent output sequence.
///
/// The raw stream is std::mt19937_64, whose outputs the C++ standard pins
/// down exactly. The standard distributions are not pinned down, so every
/// derived value is produced here by a fixed recipe:
///   - uniform(): top 53 bits of one draw scaled by 2^-53, giving [0, 1)
///   - normal(): Box-Muller on two uniforms, cosine branch only
///   - below(n): rejection sampling on the raw draw
///   - permutation(n): Fisher-Yates from the back using below()
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform();
    double uniform(double lo, double hi);
    double normal();
    std::uint64_t below(std::uint64_t n);
    std::vector<std::size_t> permutation(std::size_t n);

    friend bool operator==(const Rng&, const Rng&) = default;

  private:
    std::mt19937_64 engine_;
};

/// SplitMix64 mix of (seed, stream); used to give independent sub-streams
/// (noise, shuffling, sampling) to a single user seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}// namespace olrwa
