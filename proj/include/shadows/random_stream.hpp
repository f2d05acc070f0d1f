// Copyright 2026 The Shadows Authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace shadows {

/// Counter-based SplitMix64 generator. Draw k of a stream seeded with s is
/// mix64(s + k * 0x9E3779B97F4A7C15), so replay is bit-identical across
/// platforms. Satisfies std::uniform_random_bit_generator.
class RandomStream {
   public:
    using result_type = uint64_t;

    explicit RandomStream(uint64_t seed) : seed_(seed) {}

    /// Independent stream for sub-task `index` of a run seeded with `seed`.
    static RandomStream derive(uint64_t seed, uint64_t index) {
        return RandomStream(mix64(seed ^ mix64(index + 0xD1B54A32D192ED03ULL)));
    }

    static constexpr uint64_t mix64(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<uint64_t>::max(); }

    uint64_t seed() const { return seed_; }
    uint64_t counter() const { return counter_; }

    result_type operator()() {
        counter_++;
        return mix64(seed_ + counter_ * 0x9E3779B97F4A7C15ULL);
    }

    bool coin() { return (*this)() >> 63; }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound); bound must be positive.
    uint64_t below(uint64_t bound) {
        uint64_t limit = max() - max() % bound;
        while (true) {
            uint64_t v = (*this)();
            if (v < limit) {
                return v % bound;
            }
        }
    }

    /// Standard normal deviate (Box-Muller, one value per two uniforms).
    double normal() {
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

   private:
    uint64_t seed_;
    uint64_t counter_ = 0;
};

}  // namespace shadows
