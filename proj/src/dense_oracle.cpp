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

#include "shadows/dense_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace shadows {

DenseState tableau_to_dense(const StabilizerTableau &t) {
    size_t n = t.num_qubits();
    check_dense_size(n);
    Eigen::Index dim = Eigen::Index{1} << n;
    std::vector<PauliString> stabilizers = t.stabilizers();
    RandomStream rng(0x7AB1EA0ULL);
    for (int attempt = 0; attempt < 16; attempt++) {
        Eigen::VectorXcd v(dim);
        for (Eigen::Index k = 0; k < dim; k++) {
            v[k] = {rng.normal(), rng.normal()};
        }
        for (const PauliString &s : stabilizers) {
            Eigen::VectorXcd sv = v;
            apply_pauli(s, sv);
            v = 0.5 * (v + sv);
        }
        double norm = v.norm();
        if (norm > 1e-6) {
            v /= norm;
            fix_global_phase(v);
            return {n, std::move(v)};
        }
    }
    throw std::runtime_error("failed to project onto the stabilizer state");
}

void for_each_rotated_basis_state(const CliffordElement &c,
                                  const std::function<void(uint64_t, const Eigen::VectorXcd &)> &fn) {
    size_t n = c.num_qubits();
    check_dense_size(n);
    CliffordElement inv = inverse(c);
    // U^dag |b> = (U^dag X^b U) U^dag |0>, and the U^dag X_j U commute.
    Eigen::VectorXcd v = tableau_to_dense(apply_clifford(StabilizerTableau(n), inv)).amplitudes;
    std::vector<PauliString> flips;
    for (size_t j = 0; j < n; j++) {
        flips.push_back(conjugate_pauli(inv, PauliString::single(n, j, 'X')));
    }
    fn(0, v);
    uint64_t count = uint64_t{1} << n;
    for (uint64_t k = 1; k < count; k++) {
        apply_pauli(flips[static_cast<size_t>(std::countr_zero(k))], v);
        fn(k ^ (k >> 1), v);
    }
}

DenseState rotated_basis_state(const CliffordElement &c, const Bitstring &b) {
    size_t n = c.num_qubits();
    check_dense_size(n);
    if (b.size() != n) {
        throw std::invalid_argument("outcome length does not match Clifford");
    }
    CliffordElement inv = inverse(c);
    Eigen::VectorXcd v = tableau_to_dense(apply_clifford(StabilizerTableau::basis_state(b), inv)).amplitudes;
    return {n, std::move(v)};
}

DenseOperator clifford_to_dense(const CliffordElement &c) {
    size_t n = c.num_qubits();
    if (n == 0 || n > 6) {
        throw std::invalid_argument("clifford_to_dense supports 1..6 qubits");
    }
    if (!c.is_valid()) {
        throw std::invalid_argument("Clifford element is not symplectic");
    }
    Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd u_dag(dim, dim);
    for_each_rotated_basis_state(c, [&](uint64_t b, const Eigen::VectorXcd &v) {
        u_dag.col(static_cast<Eigen::Index>(b)) = v;
    });
    Eigen::MatrixXcd u = u_dag.adjoint();
    for (size_t j = 0; j < n; j++) {
        for (char g : {'X', 'Z'}) {
            Eigen::MatrixXcd lhs = u * pauli_matrix(PauliString::single(n, j, g)) * u_dag;
            Eigen::MatrixXcd rhs = pauli_matrix(g == 'X' ? c.x_image(j) : c.z_image(j));
            if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-10) {
                throw std::invalid_argument("Clifford images are inconsistent with any unitary");
            }
        }
    }
    return {n, std::move(u)};
}

std::vector<CliffordElement> enumerate_cliffords(size_t num_qubits) {
    size_t n = num_qubits;
    if (n == 0 || n > 2) {
        throw std::invalid_argument("Clifford enumeration supports 1..2 qubits");
    }
    size_t matrix_bits = 4 * n * n;
    std::vector<CliffordElement> result;
    for (uint64_t code = 0; code < (uint64_t{1} << matrix_bits); code++) {
        CliffordElement c(n);
        PauliTable &rows = c.images();
        // Bits of `code`: row k of Gamma (x part then z part), k = 0..2n-1.
        for (size_t k = 0; k < 2 * n; k++) {
            for (size_t i = 0; i < n; i++) {
                set_bit(rows.x(k), i, (code >> (k * 2 * n + i)) & 1);
                set_bit(rows.z(k), i, (code >> (k * 2 * n + n + i)) & 1);
            }
        }
        if (!c.is_valid()) {
            continue;
        }
        for (uint64_t signs = 0; signs < (uint64_t{1} << (2 * n)); signs++) {
            for (size_t k = 0; k < 2 * n; k++) {
                rows.set_phase(k, ((signs >> k) & 1) ? 2 : 0);
            }
            result.push_back(c);
        }
    }
    return result;
}

std::vector<StabilizerTableau> enumerate_stabilizer_tableaus(size_t num_qubits) {
    size_t n = num_qubits;
    if (n == 0 || n > 3) {
        throw std::invalid_argument("stabilizer state enumeration supports 1..3 qubits");
    }
    std::vector<CliffordElement> generators;
    for (size_t q = 0; q < n; q++) {
        generators.push_back(CliffordElement::hadamard(n, q));
        generators.push_back(CliffordElement::phase_gate(n, q));
        for (size_t t = 0; t < n; t++) {
            if (t != q) {
                generators.push_back(CliffordElement::cnot(n, q, t));
            }
        }
    }
    // A state is identified by its full stabilizer group.
    auto group_key = [n](const StabilizerTableau &t) {
        std::vector<std::string> elements;
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask++) {
            PauliString p(n);
            for (size_t i = 0; i < n; i++) {
                if ((mask >> i) & 1) {
                    t.rows().multiply_into(p, n + i);
                }
            }
            elements.push_back(p.to_string());
        }
        std::ranges::sort(elements);
        std::string key;
        for (const std::string &e : elements) {
            key += e;
            key += ',';
        }
        return key;
    };
    std::vector<StabilizerTableau> states;
    std::set<std::string> seen;
    std::deque<StabilizerTableau> frontier;
    StabilizerTableau zero(n);
    seen.insert(group_key(zero));
    states.push_back(zero);
    frontier.push_back(zero);
    while (!frontier.empty()) {
        StabilizerTableau t = std::move(frontier.front());
        frontier.pop_front();
        for (const CliffordElement &g : generators) {
            StabilizerTableau next = apply_clifford(t, g);
            if (seen.insert(group_key(next)).second) {
                states.push_back(next);
                frontier.push_back(std::move(next));
            }
        }
    }
    return states;
}

std::vector<DenseState> enumerate_stabilizer_states(size_t num_qubits) {
    std::vector<DenseState> result;
    for (const StabilizerTableau &t : enumerate_stabilizer_tableaus(num_qubits)) {
        result.push_back(tableau_to_dense(t));
    }
    return result;
}

SnapshotMoments exact_snapshot_moments(const DenseOperator &rho, const DenseOperator &observable) {
    size_t n = rho.num_qubits;
    if (n == 0 || n > 2) {
        throw std::invalid_argument("exact snapshot moments support 1..2 qubits");
    }
    if (observable.num_qubits != n) {
        throw std::invalid_argument("state and observable dimensions differ");
    }
    double scale = static_cast<double>((uint64_t{1} << n) + 1);
    double trace_o = observable.trace();
    std::vector<CliffordElement> group = enumerate_cliffords(n);
    double weight = 1.0 / static_cast<double>(group.size());
    double first = 0;
    double second = 0;
    double total = 0;
    for (const CliffordElement &c : group) {
        for_each_rotated_basis_state(c, [&](uint64_t, const Eigen::VectorXcd &s) {
            double p = expectation(rho.matrix, s);
            double estimate = scale * expectation(observable.matrix, s) - trace_o;
            total += weight * p;
            first += weight * p * estimate;
            second += weight * p * estimate * estimate;
        });
    }
    return {first, second - first * first, total};
}

DirectMeasurementResult direct_witness_measurement(const DenseState &state, const WitnessSpec &w, double epsilon,
                                                   RandomStream &rng, const DirectMeasurementOptions &options) {
    if (state.num_qubits != 3) {
        throw std::invalid_argument("direct witness measurement needs a three-qubit state");
    }
    if (!(epsilon > 0)) {
        throw std::invalid_argument("target accuracy must be positive");
    }
    double p = std::clamp(std::norm(witness_target(w).dot(state.amplitudes)), 0.0, 1.0);
    uint64_t hits = 0;
    uint64_t shots = 0;
    while (shots < options.max_shots) {
        hits += rng.uniform() < p;
        shots++;
        if (shots >= options.min_shots) {
            double freq = static_cast<double>(hits) / static_cast<double>(shots);
            if (std::sqrt(freq * (1 - freq) / static_cast<double>(shots)) < epsilon) {
                break;
            }
        }
    }
    double freq = static_cast<double>(hits) / static_cast<double>(shots);
    return {w.alpha - freq, shots, freq};
}

}  // namespace shadows
