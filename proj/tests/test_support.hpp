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


// Test-side oracles shared by the unit and acceptance tests. They rebuild
// dense matrices from first principles rather than through the library.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "shadows/clifford_element.hpp"
#include "shadows/clifford_sampler.hpp"
#include "shadows/pauli_string.hpp"
#include "shadows/random_stream.hpp"
#include "shadows/tableau.hpp"

namespace shadows::testing {

using cd = std::complex<double>;

inline Eigen::Matrix2cd sigma(bool x, bool z) {
    Eigen::Matrix2cd m;
    if (!x && !z) {
        m << 1, 0, 0, 1;
    } else if (x && !z) {
        m << 0, 1, 1, 0;
    } else if (!x && z) {
        m << 1, 0, 0, -1;
    } else {
        m << 0, cd(0, -1), cd(0, 1), 0;
    }
    return m;
}

/// i^phase (x) sigma(x_j, z_j); qubit j is bit j of the basis index.
inline Eigen::MatrixXcd pauli_dense(const PauliString &p) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (size_t j = 0; j < p.num_qubits(); j++) {
        Eigen::Matrix2cd s = sigma(p.x_bit(j), p.z_bit(j));
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                next.block(a * m.rows(), b * m.cols(), m.rows(), m.cols()) = s(a, b) * m;
            }
        }
        m = next;
    }
    const cd phases[4] = {1, cd(0, 1), -1, cd(0, -1)};
    return phases[p.phase()] * m;
}

inline PauliString random_pauli(size_t n, RandomStream &rng, bool hermitian = true) {
    PauliString p(n);
    for (size_t j = 0; j < n; j++) {
        p.set_pauli(j, "IXYZ"[rng.below(4)]);
    }
    p.set_phase(hermitian ? 2 * rng.below(2) : rng.below(4));
    return p;
}

inline Eigen::MatrixXcd gaussian_matrix(size_t dim, RandomStream &rng) {
    Eigen::MatrixXcd g(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            g(i, j) = cd(rng.normal(), rng.normal());
        }
    }
    return g;
}

inline Eigen::MatrixXcd random_hermitian(size_t dim, RandomStream &rng) {
    Eigen::MatrixXcd g = gaussian_matrix(dim, rng);
    return (g + g.adjoint()) / 2;
}

inline Eigen::VectorXcd random_vector(size_t dim, RandomStream &rng) {
    Eigen::VectorXcd v(dim);
    for (size_t i = 0; i < dim; i++) {
        v(i) = cd(rng.normal(), rng.normal());
    }
    return v.normalized();
}

/// Random density matrix of the given rank.
inline Eigen::MatrixXcd random_density(size_t dim, size_t rank, RandomStream &rng) {
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (size_t k = 0; k < rank; k++) {
        Eigen::VectorXcd v = random_vector(dim, rng);
        rho += (0.5 + rng.uniform()) * v * v.adjoint();
    }
    return rho / rho.trace().real();
}

/// |<u|v>|^2 for normalized vectors.
inline double overlap(const Eigen::VectorXcd &u, const Eigen::VectorXcd &v) { return std::norm(u.dot(v)); }

/// Group key of a Clifford modulo phase: symplectic bits then signs.
inline uint64_t clifford_key(const CliffordElement &c) {
    size_t n = c.num_qubits();
    uint64_t key = 0;
    size_t bit = 0;
    for (size_t j = 0; j < n; j++) {
        for (size_t i = 0; i < n; i++) {
            key |= uint64_t{c.alpha(j, i)} << bit++;
            key |= uint64_t{c.beta(j, i)} << bit++;
            key |= uint64_t{c.gamma(j, i)} << bit++;
            key |= uint64_t{c.delta(j, i)} << bit++;
        }
    }
    for (size_t j = 0; j < n; j++) {
        key |= uint64_t{c.r(j)} << bit++;
        key |= uint64_t{c.s(j)} << bit++;
    }
    return key;
}

/// All 2n x 2n binary matrices preserving the symplectic form, as row lists
/// (row k = image of the k-th generator X_0..X_{n-1}, Z_0..Z_{n-1}; columns
/// x bits then z bits). Brute force over every candidate matrix; n <= 2.
inline std::vector<std::vector<uint32_t>> brute_force_symplectic(size_t n) {
    size_t dim = 2 * n;
    auto form = [n](uint32_t a, uint32_t b) {
        uint32_t ax = a & ((1u << n) - 1), az = a >> n;
        uint32_t bx = b & ((1u << n) - 1), bz = b >> n;
        return (std::popcount(ax & bz) + std::popcount(az & bx)) & 1;
    };
    std::vector<std::vector<uint32_t>> result;
    uint64_t total = uint64_t{1} << (dim * dim);
    for (uint64_t m = 0; m < total; m++) {
        std::vector<uint32_t> rows(dim);
        for (size_t k = 0; k < dim; k++) {
            rows[k] = static_cast<uint32_t>((m >> (k * dim)) & ((1u << dim) - 1));
        }
        bool ok = true;
        for (size_t a = 0; a < dim && ok; a++) {
            for (size_t b = a + 1; b < dim && ok; b++) {
                int expected = (b == a + n) ? 1 : 0;
                ok = form(rows[a], rows[b]) == expected;
            }
        }
        if (ok) {
            result.push_back(rows);
        }
    }
    return result;
}

/// Builds the element with the given symplectic rows and signs r, s.
inline CliffordElement element_from_rows(size_t n, const std::vector<uint32_t> &rows, uint32_t r, uint32_t s) {
    CliffordElement c(n);
    for (size_t k = 0; k < 2 * n; k++) {
        for (size_t i = 0; i < n; i++) {
            bool x = (rows[k] >> i) & 1;
            bool z = (rows[k] >> (n + i)) & 1;
            if (k < n) {
                c.set_alpha(k, i, x);
                c.set_beta(k, i, z);
            } else {
                c.set_gamma(k - n, i, x);
                c.set_delta(k - n, i, z);
            }
        }
    }
    for (size_t j = 0; j < n; j++) {
        c.set_r(j, (r >> j) & 1);
        c.set_s(j, (s >> j) & 1);
    }
    return c;
}

/// Random stabilizer state: a random Clifford applied to |0^n>.
inline StabilizerTableau random_tableau(size_t n, RandomStream &rng) {
    return apply_clifford(StabilizerTableau(n), sample_clifford(n, rng));
}

}  // namespace shadows::testing
