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

#include "shadows/clifford_sampler.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

namespace shadows {

namespace {

struct SymplecticVector {
    std::vector<uint64_t> x;
    std::vector<uint64_t> z;

    explicit SymplecticVector(size_t num_words) : x(num_words, 0), z(num_words, 0) {}

    bool is_zero() const { return !any_bit(x) && !any_bit(z); }
    bool qubit_active(size_t q) const { return get_bit(x, q) || get_bit(z, q); }
    bool operator==(const SymplecticVector &other) const = default;

    SymplecticVector &operator^=(const SymplecticVector &other) {
        xor_into(x, other.x);
        xor_into(z, other.z);
        return *this;
    }
};

bool symplectic_product(std::span<const uint64_t> ax, std::span<const uint64_t> az, const SymplecticVector &b) {
    return detail::anticommutes(ax, az, b.x, b.z);
}

/// v <- v + <v, k> k.
void transvect(std::span<uint64_t> vx, std::span<uint64_t> vz, const SymplecticVector &k) {
    if (symplectic_product(vx, vz, k)) {
        xor_into(vx, k.x);
        xor_into(vz, k.z);
    }
}

void transvect(SymplecticVector &v, const SymplecticVector &k) { transvect(v.x, v.z, k); }

/// Single-qubit vector on qubit q that anticommutes with the (nonzero)
/// single-qubit part (px, pz).
void set_anticommuting(SymplecticVector &out, size_t q, bool px, bool pz) {
    if (px && pz) {
        set_bit(out.z, q, true);
    } else {
        set_bit(out.x, q, pz);
        set_bit(out.z, q, px);
    }
}

/// Returns (h1, h2) with target = Z_h2 Z_h1 source, for nonzero vectors
/// supported on qubits [lo, n).
std::pair<SymplecticVector, SymplecticVector> find_transvection(const SymplecticVector &source,
                                                                const SymplecticVector &target, size_t lo, size_t n) {
    size_t num_words = source.x.size();
    SymplecticVector h1(num_words);
    SymplecticVector h2(num_words);
    if (source == target) {
        return {h1, h2};
    }
    if (symplectic_product(source.x, source.z, target)) {
        h1 = source;
        h1 ^= target;
        return {h1, h2};
    }
    SymplecticVector mid(num_words);
    bool found = false;
    for (size_t q = lo; q < n && !found; q++) {
        if (source.qubit_active(q) && target.qubit_active(q)) {
            bool mx = get_bit(source.x, q) ^ get_bit(target.x, q);
            bool mz = get_bit(source.z, q) ^ get_bit(target.z, q);
            if (!mx && !mz) {
                set_anticommuting(mid, q, get_bit(source.x, q), get_bit(source.z, q));
            } else {
                set_bit(mid.x, q, mx);
                set_bit(mid.z, q, mz);
            }
            found = true;
        }
    }
    if (!found) {
        for (size_t q = lo; q < n; q++) {
            if (source.qubit_active(q) && !target.qubit_active(q)) {
                set_anticommuting(mid, q, get_bit(source.x, q), get_bit(source.z, q));
                break;
            }
        }
        for (size_t q = lo; q < n; q++) {
            if (!source.qubit_active(q) && target.qubit_active(q)) {
                set_anticommuting(mid, q, get_bit(target.x, q), get_bit(target.z, q));
                break;
            }
        }
    }
    h1 = source;
    h1 ^= mid;
    h2 = target;
    h2 ^= mid;
    return {h1, h2};
}

/// Fills both halves with uniform bits on qubits [lo, n).
void randomize(SymplecticVector &v, size_t lo, size_t n, RandomStream &rng) {
    for (size_t w = 0; w < v.x.size(); w++) {
        v.x[w] = rng();
        v.z[w] = rng();
    }
    for (size_t w = 0; w < v.x.size(); w++) {
        size_t begin = std::clamp(lo, w * 64, w * 64 + 64) - w * 64;
        size_t end = std::clamp(n, w * 64, w * 64 + 64) - w * 64;
        uint64_t below_end = end == 64 ? ~uint64_t{0} : (uint64_t{1} << end) - 1;
        uint64_t below_begin = begin == 64 ? ~uint64_t{0} : (uint64_t{1} << begin) - 1;
        uint64_t mask = below_end & ~below_begin;
        v.x[w] &= mask;
        v.z[w] &= mask;
    }
}

/// The four transvections of one level, applied in sequence. Their effect on
/// a row depends only on the row's products with each vector, so they fold
/// into one pass: four parities, then one XOR with the matching combination.
class LevelUpdate {
   public:
    explicit LevelUpdate(size_t num_words)
        : num_words_(num_words), vectors_(4 * 2 * num_words), combos_(16 * 2 * num_words, 0) {}

    void set_vector(int k, const SymplecticVector &v) {
        std::ranges::copy(v.x, vectors_.begin() + 2 * k * num_words_);
        std::ranges::copy(v.z, vectors_.begin() + (2 * k + 1) * num_words_);
    }

    void finish(const bool mutual[4][4]) {
        for (unsigned mask = 1; mask < 16; mask++) {
            int low = std::countr_zero(mask);
            const uint64_t *prev = &combos_[(mask & (mask - 1)) * 2 * num_words_];
            const uint64_t *add = &vectors_[2 * low * num_words_];
            for (size_t w = 0; w < 2 * num_words_; w++) {
                combos_[mask * 2 * num_words_ + w] = prev[w] ^ add[w];
            }
        }
        for (int a = 0; a < 4; a++) {
            for (int b = 0; b < 4; b++) {
                mutual_[a][b] = mutual[a][b];
            }
        }
    }

    /// W is the word count, or 0 for a runtime count.
    template <size_t W>
    void apply(PauliTable &rows, size_t level, size_t n) const {
        size_t num_words = W ? W : num_words_;
        // Every vector lives on qubits [level, n); lower words are untouched.
        size_t first = level >> 6;
        const uint64_t *v = vectors_.data();
        const unsigned m01 = mutual_[0][1], m02 = mutual_[0][2], m03 = mutual_[0][3];
        const unsigned m12 = mutual_[1][2], m13 = mutual_[1][3], m23 = mutual_[2][3];
        for (size_t q = level; q < n; q++) {
            for (size_t row : {q, n + q}) {
                uint64_t *rx = rows.x(row).data();
                uint64_t *rz = rows.z(row).data();
                uint64_t a0 = 0, a1 = 0, a2 = 0, a3 = 0;
                for (size_t w = first; w < num_words; w++) {
                    uint64_t x = rx[w];
                    uint64_t z = rz[w];
                    a0 ^= (x & v[1 * num_words + w]) ^ (z & v[0 * num_words + w]);
                    a1 ^= (x & v[3 * num_words + w]) ^ (z & v[2 * num_words + w]);
                    a2 ^= (x & v[5 * num_words + w]) ^ (z & v[4 * num_words + w]);
                    a3 ^= (x & v[7 * num_words + w]) ^ (z & v[6 * num_words + w]);
                }
                unsigned f0 = std::popcount(a0) & 1;
                unsigned f1 = (std::popcount(a1) & 1) ^ (f0 & m01);
                unsigned f2 = (std::popcount(a2) & 1) ^ (f0 & m02) ^ (f1 & m12);
                unsigned f3 = (std::popcount(a3) & 1) ^ (f0 & m03) ^ (f1 & m13) ^ (f2 & m23);
                unsigned applied = f0 | (f1 << 1) | (f2 << 2) | (f3 << 3);
                if (applied) {
                    const uint64_t *c = &combos_[applied * 2 * num_words];
                    for (size_t w = first; w < num_words; w++) {
                        rx[w] ^= c[w];
                        rz[w] ^= c[num_words + w];
                    }
                }
            }
        }
    }

   private:
    size_t num_words_;
    std::vector<uint64_t> vectors_;
    std::vector<uint64_t> combos_;
    bool mutual_[4][4] = {};
};

uint64_t checked_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a) {
        throw std::overflow_error("group order does not fit in 64 bits");
    }
    return a * b;
}

}  // namespace

CliffordElement sample_clifford(size_t num_qubits, RandomStream &rng) {
    if (num_qubits == 0) {
        throw std::invalid_argument("cannot sample a Clifford on zero qubits");
    }
    size_t n = num_qubits;
    CliffordElement result(n);
    PauliTable &rows = result.images();
    size_t num_words = rows.num_words();

    // Level j fixes the image of X_j, Z_j within the subgroup acting on
    // qubits [j, n); inner levels are built first and then transvected.
    for (size_t level = n; level-- > 0;) {
        SymplecticVector f1(num_words);
        do {
            randomize(f1, level, n, rng);
        } while (f1.is_zero());

        SymplecticVector e1(num_words);
        set_bit(e1.x, level, true);
        auto [t1, t2] = find_transvection(e1, f1, level, n);

        bool drop_f1 = rng.coin();
        SymplecticVector h0(num_words);
        randomize(h0, level + 1, n, rng);
        set_bit(h0.x, level, true);
        transvect(h0, t1);
        transvect(h0, t2);
        if (drop_f1) {
            f1 = SymplecticVector(num_words);
        }

        const SymplecticVector *ks[4] = {&t1, &t2, &h0, &f1};
        bool mutual[4][4];
        for (int a = 0; a < 4; a++) {
            for (int b = 0; b < 4; b++) {
                mutual[a][b] = symplectic_product(ks[a]->x, ks[a]->z, *ks[b]);
            }
        }
        LevelUpdate update(num_words);
        for (int k = 0; k < 4; k++) {
            update.set_vector(k, *ks[k]);
        }
        update.finish(mutual);
        switch (num_words) {
            case 1:
                update.apply<1>(rows, level, n);
                break;
            case 2:
                update.apply<2>(rows, level, n);
                break;
            case 3:
                update.apply<3>(rows, level, n);
                break;
            case 4:
                update.apply<4>(rows, level, n);
                break;
            default:
                update.apply<0>(rows, level, n);
                break;
        }
    }

    std::vector<uint64_t> signs(2 * num_words);
    for (uint64_t &w : signs) {
        w = rng();
    }
    for (size_t j = 0; j < n; j++) {
        result.set_r(j, get_bit(signs, j));
        result.set_s(j, get_bit(signs, num_words * 64 + j));
    }
    return result;
}

uint64_t count_stabilizer_states(size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("qubit count must be positive");
    }
    if (num_qubits >= 64) {
        throw std::overflow_error("stabilizer state count does not fit in 64 bits");
    }
    uint64_t total = uint64_t{1} << num_qubits;
    for (size_t j = 1; j <= num_qubits; j++) {
        total = checked_mul(total, (uint64_t{1} << j) + 1);
    }
    return total;
}

uint64_t count_symplectic_group(size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("qubit count must be positive");
    }
    if (num_qubits * num_qubits >= 64 || 2 * num_qubits >= 64) {
        throw std::overflow_error("symplectic group order does not fit in 64 bits");
    }
    uint64_t total = uint64_t{1} << (num_qubits * num_qubits);
    for (size_t j = 1; j <= num_qubits; j++) {
        total = checked_mul(total, (uint64_t{1} << (2 * j)) - 1);
    }
    return total;
}

}  // namespace shadows
