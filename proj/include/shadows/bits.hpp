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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace shadows {

constexpr size_t words_for(size_t num_bits) { return (num_bits + 63) / 64; }

inline bool get_bit(std::span<const uint64_t> words, size_t k) { return (words[k >> 6] >> (k & 63)) & 1; }

inline void set_bit(std::span<uint64_t> words, size_t k, bool value) {
    uint64_t mask = uint64_t{1} << (k & 63);
    if (value) {
        words[k >> 6] |= mask;
    } else {
        words[k >> 6] &= ~mask;
    }
}

inline void flip_bit(std::span<uint64_t> words, size_t k) { words[k >> 6] ^= uint64_t{1} << (k & 63); }

inline void xor_into(std::span<uint64_t> dst, std::span<const uint64_t> src) {
    for (size_t w = 0; w < dst.size(); w++) {
        dst[w] ^= src[w];
    }
}

inline bool any_bit(std::span<const uint64_t> words) {
    for (uint64_t w : words) {
        if (w) {
            return true;
        }
    }
    return false;
}

inline unsigned popcount_and(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    unsigned total = 0;
    for (size_t w = 0; w < a.size(); w++) {
        total += std::popcount(a[w] & b[w]);
    }
    return total;
}

/// Fixed-length bit vector, packed little-endian into 64-bit words. Unused
/// high bits of the last word are kept zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits) : size_(num_bits), words_(words_for(num_bits), 0) {}

    /// Parses a string of '0'/'1' characters; character k is bit k.
    static BitVector from_string(const std::string &text);

    size_t size() const { return size_; }
    bool operator[](size_t k) const { return get_bit(words_, k); }
    void set(size_t k, bool value) { set_bit(words_, k, value); }
    void flip(size_t k) { flip_bit(words_, k); }
    size_t count() const;

    std::span<uint64_t> words() { return words_; }
    std::span<const uint64_t> words() const { return words_; }

    std::string to_string() const;

    bool operator==(const BitVector &other) const = default;

   private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// Computational-basis measurement outcome b in {0,1}^n.
using Bitstring = BitVector;

}  // namespace shadows
