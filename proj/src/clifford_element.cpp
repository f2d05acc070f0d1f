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

#include "shadows/clifford_element.hpp"

#include <algorithm>
#include <stdexcept>

namespace shadows {

CliffordElement::CliffordElement(size_t num_qubits) : num_qubits_(num_qubits), images_(num_qubits, 2 * num_qubits) {
    for (size_t j = 0; j < num_qubits; j++) {
        set_alpha(j, j, true);
        set_delta(j, j, true);
    }
}

CliffordElement CliffordElement::hadamard(size_t num_qubits, size_t qubit) {
    CliffordElement c(num_qubits);
    c.set_alpha(qubit, qubit, false);
    c.set_beta(qubit, qubit, true);
    c.set_gamma(qubit, qubit, true);
    c.set_delta(qubit, qubit, false);
    return c;
}

CliffordElement CliffordElement::phase_gate(size_t num_qubits, size_t qubit) {
    // S X S^dag = Y, S Z S^dag = Z.
    CliffordElement c(num_qubits);
    c.set_beta(qubit, qubit, true);
    return c;
}

CliffordElement CliffordElement::cnot(size_t num_qubits, size_t control, size_t target) {
    if (control == target) {
        throw std::invalid_argument("CNOT control and target coincide");
    }
    CliffordElement c(num_qubits);
    c.set_alpha(control, target, true);
    c.set_delta(target, control, true);
    return c;
}

CliffordElement CliffordElement::pauli(const PauliString &p) {
    CliffordElement c(p.num_qubits());
    for (size_t j = 0; j < p.num_qubits(); j++) {
        c.set_r(j, p.z_bit(j));
        c.set_s(j, p.x_bit(j));
    }
    return c;
}

bool CliffordElement::is_valid() const {
    size_t n = num_qubits_;
    for (size_t a = 0; a < 2 * n; a++) {
        if (images_.phase(a) & 1) {
            return false;
        }
        for (size_t b = a + 1; b < 2 * n; b++) {
            bool expected = b == a + n;
            if (images_.anticommute(a, b) != expected) {
                return false;
            }
        }
    }
    return true;
}

PauliConjugator::PauliConjugator(const CliffordElement &c) : clifford_(&c), xz_phase_(2 * c.num_qubits()) {
    const PauliTable &images = c.images();
    for (size_t k = 0; k < xz_phase_.size(); k++) {
        xz_phase_[k] = (images.phase(k) + popcount_and(images.x(k), images.z(k))) & 3;
    }
}

unsigned PauliConjugator::conjugate(std::span<const uint64_t> x, std::span<const uint64_t> z, unsigned phase,
                                    std::span<uint64_t> out_x, std::span<uint64_t> out_z) const {
    // In X-before-Z form the input is i^(phase + #Y) prod_j X_j^x_j  prod_j Z_j^z_j,
    // so the image is the ordered product of generator images.
    const PauliTable &images = clifford_->images();
    size_t n = clifford_->num_qubits();
    size_t num_words = images.num_words();
    std::ranges::fill(out_x, 0);
    std::ranges::fill(out_z, 0);
    unsigned acc_phase = phase + popcount_and(x, z);

    auto absorb = [&](size_t k) {
        std::span<const uint64_t> ix = images.x(k);
        std::span<const uint64_t> iz = images.z(k);
        uint64_t parity = 0;
        for (size_t w = 0; w < num_words; w++) {
            parity ^= out_z[w] & ix[w];
            out_x[w] ^= ix[w];
            out_z[w] ^= iz[w];
        }
        acc_phase += xz_phase_[k] + 2 * (std::popcount(parity) & 1);
    };

    for (size_t w = 0; w < x.size(); w++) {
        for (uint64_t bits = x[w]; bits; bits &= bits - 1) {
            absorb(w * 64 + std::countr_zero(bits));
        }
    }
    for (size_t w = 0; w < z.size(); w++) {
        for (uint64_t bits = z[w]; bits; bits &= bits - 1) {
            absorb(n + w * 64 + std::countr_zero(bits));
        }
    }
    acc_phase += 3 * popcount_and(out_x, out_z);
    return acc_phase & 3;
}

PauliString PauliConjugator::operator()(const PauliString &p) const {
    if (p.num_qubits() != clifford_->num_qubits()) {
        throw std::invalid_argument("Clifford and Pauli string act on different qubit counts");
    }
    PauliString result(p.num_qubits());
    result.set_phase(conjugate(p.x(), p.z(), p.phase(), result.x(), result.z()));
    return result;
}

PauliString conjugate_pauli(const CliffordElement &c, const PauliString &p) { return PauliConjugator(c)(p); }

CliffordElement compose(const CliffordElement &outer, const CliffordElement &inner) {
    if (outer.num_qubits() != inner.num_qubits()) {
        throw std::invalid_argument("cannot compose Cliffords on different qubit counts");
    }
    PauliConjugator conj(outer);
    CliffordElement result(inner.num_qubits());
    const PauliTable &src = inner.images();
    PauliTable &dst = result.images();
    for (size_t k = 0; k < src.num_rows(); k++) {
        dst.set_phase(k, conj.conjugate(src.x(k), src.z(k), src.phase(k), dst.x(k), dst.z(k)));
    }
    return result;
}

CliffordElement inverse(const CliffordElement &c) {
    // For symplectic Gamma = [[alpha, beta], [gamma, delta]] the inverse is
    // [[delta^T, beta^T], [gamma^T, alpha^T]]. Signs follow by pushing each
    // unsigned inverse image back through c.
    size_t n = c.num_qubits();
    CliffordElement result(n);
    for (size_t j = 0; j < n; j++) {
        for (size_t i = 0; i < n; i++) {
            result.set_alpha(j, i, c.delta(i, j));
            result.set_beta(j, i, c.beta(i, j));
            result.set_gamma(j, i, c.gamma(i, j));
            result.set_delta(j, i, c.alpha(i, j));
        }
    }
    PauliConjugator conj(c);
    PauliString scratch(n);
    PauliTable &images = result.images();
    for (size_t k = 0; k < 2 * n; k++) {
        unsigned back = conj.conjugate(images.x(k), images.z(k), 0, scratch.x(), scratch.z());
        images.set_phase(k, back);
    }
    return result;
}

}  // namespace shadows
