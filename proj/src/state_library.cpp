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

#include "shadows/state_library.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace shadows {

StabilizerTableau ghz_tableau(size_t num_qubits, int sign) {
    if (num_qubits == 0) {
        throw std::invalid_argument("GHZ state needs at least one qubit");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("GHZ sign must be +1 or -1");
    }
    size_t n = num_qubits;
    std::vector<PauliString> generators;
    PauliString all_x(n);
    for (size_t q = 0; q < n; q++) {
        all_x.set_pauli(q, 'X');
    }
    all_x.set_phase(sign < 0 ? 2 : 0);
    generators.push_back(all_x);
    for (size_t q = 0; q + 1 < n; q++) {
        PauliString zz(n);
        zz.set_pauli(q, 'Z');
        zz.set_pauli(q + 1, 'Z');
        generators.push_back(zz);
    }
    return StabilizerTableau::from_stabilizers(generators);
}

StatePreparation noisy_ghz_ensemble(size_t num_qubits, double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("noise probability must lie in [0, 1]");
    }
    return StatePreparation::ensemble({{1 - p, ghz_tableau(num_qubits, +1)}, {p, ghz_tableau(num_qubits, -1)}});
}

ToricLattice::ToricLattice(size_t linear_size) : size(linear_size) {
    if (linear_size < 2) {
        throw std::invalid_argument("toric lattice needs L >= 2");
    }
}

size_t ToricLattice::horizontal_edge(size_t row, size_t col) const { return (row % size) * size + col % size; }

size_t ToricLattice::vertical_edge(size_t row, size_t col) const {
    return size * size + (row % size) * size + col % size;
}

std::vector<size_t> ToricLattice::star(size_t row, size_t col) const {
    return {horizontal_edge(row, col), horizontal_edge(row, col + size - 1), vertical_edge(row, col),
            vertical_edge(row + size - 1, col)};
}

std::vector<size_t> ToricLattice::plaquette(size_t row, size_t col) const {
    return {horizontal_edge(row, col), horizontal_edge(row + 1, col), vertical_edge(row, col),
            vertical_edge(row, col + 1)};
}

std::vector<size_t> ToricLattice::vertical_loop() const {
    std::vector<size_t> edges;
    for (size_t r = 0; r < size; r++) {
        edges.push_back(vertical_edge(r, 0));
    }
    return edges;
}

std::vector<size_t> ToricLattice::horizontal_loop() const {
    std::vector<size_t> edges;
    for (size_t c = 0; c < size; c++) {
        edges.push_back(horizontal_edge(0, c));
    }
    return edges;
}

StabilizerTableau toric_code_tableau(size_t linear_size) {
    ToricLattice lattice(linear_size);
    size_t n = lattice.num_qubits();
    auto operator_on = [n](const std::vector<size_t> &edges, char pauli) {
        PauliString p(n);
        for (size_t e : edges) {
            p.set_pauli(e, pauli);
        }
        return p;
    };
    std::vector<PauliString> generators;
    size_t faces = linear_size * linear_size;
    // The product of all stars (and of all plaquettes) is the identity, so
    // the last of each is dropped.
    for (size_t v = 0; v + 1 < faces; v++) {
        generators.push_back(operator_on(lattice.star(v / linear_size, v % linear_size), 'X'));
    }
    for (size_t f = 0; f + 1 < faces; f++) {
        generators.push_back(operator_on(lattice.plaquette(f / linear_size, f % linear_size), 'Z'));
    }
    generators.push_back(operator_on(lattice.vertical_loop(), 'Z'));
    generators.push_back(operator_on(lattice.horizontal_loop(), 'Z'));
    return StabilizerTableau::from_stabilizers(generators);
}

Eigen::Matrix2cd haar_unitary_2x2(RandomStream &rng) {
    Eigen::Matrix2cd g;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            g(i, j) = std::complex<double>(rng.normal(), rng.normal()) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 2; j++) {
        std::complex<double> d = r(j, j);
        q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : 1.0;
    }
    return q;
}

DenseState random_rotated_ghz3(RandomStream &rng) {
    Eigen::VectorXcd v = ghz3_vector();
    for (size_t q = 0; q < 3; q++) {
        apply_single_qubit(haar_unitary_2x2(rng), q, v);
    }
    v.normalize();
    return {3, std::move(v)};
}

WitnessSpec random_witness(RandomStream &rng, double alpha) {
    if (alpha != 0.5 && alpha != 0.75) {
        throw std::invalid_argument("witness alpha must be 0.5 or 0.75");
    }
    WitnessSpec w;
    w.alpha = alpha;
    for (Eigen::Matrix2cd &u : w.locals) {
        u = haar_unitary_2x2(rng);
    }
    return w;
}

namespace {

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t end = text.find(sep, start);
        parts.push_back(text.substr(start, end - start));
        if (end == std::string::npos) {
            return parts;
        }
        start = end + 1;
    }
}

template <typename T>
T parse_number(const std::string &text, const std::string &spec) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("bad number '" + text + "' in state spec '" + spec + "'");
    }
    return value;
}

double parse_double(const std::string &text, const std::string &spec) {
    size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw std::invalid_argument("bad number '" + text + "' in state spec '" + spec + "'");
    }
    return value;
}

}  // namespace

StatePreparation parse_state_spec(const std::string &spec) {
    std::vector<std::string> parts = split(spec, ':');
    const std::string &kind = parts[0];
    if ((kind == "ghz" || kind == "ghz-" || kind == "toric" || kind == "rotated-ghz3") && parts.size() == 2) {
        if (kind == "rotated-ghz3") {
            RandomStream rng(parse_number<uint64_t>(parts[1], spec));
            return StatePreparation::dense(random_rotated_ghz3(rng));
        }
        return StatePreparation::pure(parse_stabilizer_spec(spec));
    }
    if (kind == "noisy-ghz" && parts.size() == 3) {
        return noisy_ghz_ensemble(parse_number<size_t>(parts[1], spec), parse_double(parts[2], spec));
    }
    throw std::invalid_argument("unknown state spec '" + spec +
                                "'; expected ghz:<n>, ghz-:<n>, noisy-ghz:<n>:<p>, toric:<L> or rotated-ghz3:<seed>");
}

StabilizerTableau parse_stabilizer_spec(const std::string &spec) {
    std::vector<std::string> parts = split(spec, ':');
    if (parts.size() == 2) {
        if (parts[0] == "ghz") {
            return ghz_tableau(parse_number<size_t>(parts[1], spec), +1);
        }
        if (parts[0] == "ghz-") {
            return ghz_tableau(parse_number<size_t>(parts[1], spec), -1);
        }
        if (parts[0] == "toric") {
            return toric_code_tableau(parse_number<size_t>(parts[1], spec));
        }
    }
    throw std::invalid_argument("'" + spec + "' does not name a pure stabilizer state");
}

}  // namespace shadows
