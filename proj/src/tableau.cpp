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

#include "shadows/tableau.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace shadows {

namespace {

/// Dense GF(2) row echelon helper over rows of `width` bits.
struct Gf2Rows {
    size_t width;
    size_t num_words;
    std::vector<std::vector<uint64_t>> rows;

    explicit Gf2Rows(size_t width_bits) : width(width_bits), num_words(words_for(width_bits)) {}

    void add(std::vector<uint64_t> row) { rows.push_back(std::move(row)); }

    /// Row-reduces in place; returns pivot column of each of the first `rank` rows.
    /// `partner` (if given) receives the same row operations.
    std::vector<size_t> reduce(Gf2Rows *partner = nullptr) {
        std::vector<size_t> pivots;
        size_t next = 0;
        for (size_t col = 0; col < width && next < rows.size(); col++) {
            size_t found = next;
            while (found < rows.size() && !get_bit(rows[found], col)) {
                found++;
            }
            if (found == rows.size()) {
                continue;
            }
            std::swap(rows[next], rows[found]);
            if (partner) {
                std::swap(partner->rows[next], partner->rows[found]);
            }
            for (size_t r = 0; r < rows.size(); r++) {
                if (r != next && get_bit(rows[r], col)) {
                    xor_into(rows[r], rows[next]);
                    if (partner) {
                        xor_into(partner->rows[r], partner->rows[next]);
                    }
                }
            }
            pivots.push_back(col);
            next++;
        }
        return pivots;
    }
};

/// Shared walk for sampling and forced outcomes. `choose(a)` returns the
/// outcome for a random branch on qubit a; `check(a, bit)` is told each
/// deterministic outcome and may abort the walk by returning false.
/// W is the word count per bit row, or 0 for a runtime count.
template <size_t W, typename Choose, typename Check>
bool collapse_rows(PauliTable &rows, size_t n, Choose &choose, Check &check, Bitstring &outcome,
                   size_t &random_branches) {
    const size_t num_words = W ? W : rows.num_words();
    auto xp = [&](size_t r) { return rows.x(r).data(); };
    auto zp = [&](size_t r) { return rows.z(r).data(); };
    auto has_x = [&](size_t r, size_t a) { return (xp(r)[a >> 6] >> (a & 63)) & 1; };

    std::vector<uint64_t> scratch(2 * num_words);
    for (size_t a = 0; a < n; a++) {
        size_t pivot = 2 * n;
        for (size_t r = n; r < 2 * n; r++) {
            if (has_x(r, a)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 2 * n) {
            const uint64_t *px = xp(pivot);
            const uint64_t *pz = zp(pivot);
            // Destabilizer signs never influence outcomes, so destabilizer
            // rows skip phase tracking (their phases stay even).
            for (size_t r = 0; r < n; r++) {
                if (r != pivot - n && has_x(r, a)) {
                    uint64_t *dx = xp(r);
                    uint64_t *dz = zp(r);
                    for (size_t w = 0; w < num_words; w++) {
                        dx[w] ^= px[w];
                        dz[w] ^= pz[w];
                    }
                }
            }
            unsigned pivot_phase = rows.phase(pivot);
            for (size_t r = n; r < 2 * n; r++) {
                if (r != pivot && has_x(r, a)) {
                    uint64_t *dx = xp(r);
                    uint64_t *dz = zp(r);
                    unsigned total = 0;
                    for (size_t w = 0; w < num_words; w++) {
                        uint64_t x1 = dx[w], z1 = dz[w], x2 = px[w], z2 = pz[w];
                        total += std::popcount(x1 & z1) + std::popcount(x2 & z2) + 2 * std::popcount(z1 & x2) +
                                 3 * std::popcount((x1 ^ x2) & (z1 ^ z2));
                        dx[w] = x1 ^ x2;
                        dz[w] = z1 ^ z2;
                    }
                    rows.set_phase(r, rows.phase(r) + pivot_phase + total);
                }
            }
            rows.copy_row(pivot - n, pivot);
            rows.clear_row(pivot);
            bool bit = choose(a);
            set_bit(rows.z(pivot), a, true);
            rows.set_phase(pivot, bit ? 2 : 0);
            outcome.set(a, bit);
            random_branches++;
        } else {
            std::ranges::fill(scratch, 0);
            uint64_t *sx = scratch.data();
            uint64_t *sz = sx + num_words;
            unsigned phase = 0;
            for (size_t i = 0; i < n; i++) {
                if (has_x(i, a)) {
                    const uint64_t *qx = xp(n + i);
                    const uint64_t *qz = zp(n + i);
                    unsigned total = rows.phase(n + i);
                    for (size_t w = 0; w < num_words; w++) {
                        uint64_t x1 = sx[w], z1 = sz[w], x2 = qx[w], z2 = qz[w];
                        total += std::popcount(x1 & z1) + std::popcount(x2 & z2) + 2 * std::popcount(z1 & x2) +
                                 3 * std::popcount((x1 ^ x2) & (z1 ^ z2));
                        sx[w] = x1 ^ x2;
                        sz[w] = z1 ^ z2;
                    }
                    phase += total;
                }
            }
            bool bit = (phase & 3) == 2;
            outcome.set(a, bit);
            if (!check(a, bit)) {
                return false;
            }
        }
    }
    return true;
}

template <typename Choose, typename Check>
bool collapse_all_z(PauliTable &rows, size_t n, Choose &&choose, Check &&check, Bitstring &outcome,
                    size_t &random_branches) {
    switch (rows.num_words()) {
        case 1:
            return collapse_rows<1>(rows, n, choose, check, outcome, random_branches);
        case 2:
            return collapse_rows<2>(rows, n, choose, check, outcome, random_branches);
        case 3:
            return collapse_rows<3>(rows, n, choose, check, outcome, random_branches);
        case 4:
            return collapse_rows<4>(rows, n, choose, check, outcome, random_branches);
        default:
            return collapse_rows<0>(rows, n, choose, check, outcome, random_branches);
    }
}

}  // namespace

StabilizerTableau::StabilizerTableau(size_t num_qubits) : num_qubits_(num_qubits), rows_(num_qubits, 2 * num_qubits) {
    for (size_t j = 0; j < num_qubits; j++) {
        set_bit(rows_.x(j), j, true);
        set_bit(rows_.z(num_qubits + j), j, true);
    }
}

StabilizerTableau StabilizerTableau::basis_state(const Bitstring &b) {
    StabilizerTableau t(b.size());
    for (size_t j = 0; j < b.size(); j++) {
        t.rows_.set_phase(b.size() + j, b[j] ? 2 : 0);
    }
    return t;
}

StabilizerTableau StabilizerTableau::from_stabilizers(const std::vector<PauliString> &stabilizers) {
    size_t n = stabilizers.size();
    if (n == 0) {
        throw std::invalid_argument("need at least one stabilizer generator");
    }
    for (const PauliString &p : stabilizers) {
        if (p.num_qubits() != n) {
            throw std::invalid_argument("need exactly one generator per qubit; got " + std::to_string(n) +
                                        " generators on " + std::to_string(p.num_qubits()) + " qubits");
        }
        if (!p.is_hermitian()) {
            throw std::invalid_argument("stabilizer generator is not Hermitian: " + p.to_string());
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (!stabilizers[i].commutes(stabilizers[j])) {
                throw std::invalid_argument("stabilizer generators " + std::to_string(i) + " and " +
                                            std::to_string(j) + " anticommute");
            }
        }
    }

    // Row i of `symp` is (z_i | x_i), so symp_i . (x | z) is the symplectic
    // product of stabilizer i with (x | z). Solving symp * D^T = I gives
    // destabilizer candidates.
    size_t width = 2 * n;
    Gf2Rows symp(width);
    Gf2Rows transform(n);
    for (size_t i = 0; i < n; i++) {
        std::vector<uint64_t> row(words_for(width), 0);
        for (size_t q = 0; q < n; q++) {
            set_bit(row, q, stabilizers[i].z_bit(q));
            set_bit(row, n + q, stabilizers[i].x_bit(q));
        }
        symp.add(std::move(row));
        std::vector<uint64_t> unit(words_for(n), 0);
        set_bit(unit, i, true);
        transform.add(std::move(unit));
    }
    std::vector<size_t> pivots = symp.reduce(&transform);
    if (pivots.size() != n) {
        throw std::invalid_argument("stabilizer generators are not independent");
    }

    StabilizerTableau t(n);
    PauliTable &rows = t.rows_;
    for (size_t i = 0; i < n; i++) {
        rows.clear_row(i);
        for (size_t k = 0; k < n; k++) {
            if (get_bit(transform.rows[k], i)) {
                size_t col = pivots[k];
                if (col < n) {
                    set_bit(rows.x(i), col, true);
                } else {
                    set_bit(rows.z(i), col - n, true);
                }
            }
        }
        rows.set_row(n + i, stabilizers[i]);
    }
    // Multiplying destabilizer j by stabilizer i flips only its commutation
    // with destabilizer i.
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (rows.anticommute(i, j)) {
                rows.multiply_into(j, n + i);
            }
        }
    }
    for (size_t i = 0; i < n; i++) {
        rows.set_phase(i, 0);
    }
    return t;
}

std::vector<PauliString> StabilizerTableau::stabilizers() const {
    std::vector<PauliString> result;
    result.reserve(num_qubits_);
    for (size_t i = 0; i < num_qubits_; i++) {
        result.push_back(stabilizer(i));
    }
    return result;
}

StabilizerTableau apply_clifford(const StabilizerTableau &t, const CliffordElement &c) {
    if (t.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("tableau has " + std::to_string(t.num_qubits()) + " qubits but Clifford has " +
                                    std::to_string(c.num_qubits()));
    }
    PauliConjugator conj(c);
    StabilizerTableau result = t;
    const PauliTable &src = t.rows();
    PauliTable &dst = result.rows();
    for (size_t r = 0; r < src.num_rows(); r++) {
        dst.set_phase(r, conj.conjugate(src.x(r), src.z(r), src.phase(r), dst.x(r), dst.z(r)));
    }
    return result;
}

MeasurementResult measure_all_z(StabilizerTableau t, RandomStream &rng) {
    size_t n = t.num_qubits();
    MeasurementResult result{Bitstring(n), {}, 0};
    collapse_all_z(
        t.rows(), n, [&](size_t) { return rng.coin(); }, [](size_t, bool) { return true; }, result.outcome,
        result.random_branches);
    result.state = std::move(t);
    return result;
}

DyadicProbability basis_state_probability(const StabilizerTableau &t, const Bitstring &b) {
    if (t.num_qubits() != b.size()) {
        throw std::invalid_argument("bit string length " + std::to_string(b.size()) + " does not match " +
                                    std::to_string(t.num_qubits()) + "-qubit tableau");
    }
    PauliTable rows = t.rows();
    Bitstring outcome(b.size());
    size_t random_branches = 0;
    bool consistent = collapse_all_z(
        rows, t.num_qubits(), [&](size_t a) { return b[a]; }, [&](size_t a, bool bit) { return bit == b[a]; },
        outcome, random_branches);
    if (!consistent) {
        return {};
    }
    return {false, static_cast<unsigned>(random_branches)};
}

bool validate_tableau(const StabilizerTableau &t) {
    size_t n = t.num_qubits();
    const PauliTable &rows = t.rows();
    if (rows.num_rows() != 2 * n || rows.num_qubits() != n) {
        return false;
    }
    for (size_t a = 0; a < 2 * n; a++) {
        if (rows.phase(a) & 1) {
            return false;
        }
        for (size_t b = a + 1; b < 2 * n; b++) {
            bool expected = b == a + n;
            if (rows.anticommute(a, b) != expected) {
                return false;
            }
        }
    }
    Gf2Rows matrix(2 * n);
    for (size_t r = 0; r < 2 * n; r++) {
        std::vector<uint64_t> row(words_for(2 * n), 0);
        for (size_t q = 0; q < n; q++) {
            set_bit(row, q, get_bit(rows.x(r), q));
            set_bit(row, n + q, get_bit(rows.z(r), q));
        }
        matrix.add(std::move(row));
    }
    return matrix.reduce().size() == 2 * n;
}

}  // namespace shadows
