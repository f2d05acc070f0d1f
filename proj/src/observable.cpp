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

#include "shadows/observable.hpp"

#include <cmath>
#include <stdexcept>

#include "shadows/dense_oracle.hpp"

namespace shadows {

Observable Observable::fidelity(StabilizerTableau target) {
    size_t n = target.num_qubits();
    return Observable(n, StabilizerFidelity{std::move(target)});
}

Observable Observable::dense(DenseOperator op) {
    check_dense_size(op.num_qubits);
    Eigen::Index dim = Eigen::Index{1} << op.num_qubits;
    if (op.matrix.rows() != dim || op.matrix.cols() != dim) {
        throw std::invalid_argument("dense observable has the wrong dimension");
    }
    if ((op.matrix - op.matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("dense observable is not Hermitian");
    }
    size_t n = op.num_qubits;
    return Observable(n, DenseHermitian{std::move(op)});
}

Observable Observable::witness(const WitnessSpec &spec) {
    validate_witness(spec);
    return Observable(3, Witness{spec, witness_target(spec)});
}

std::string Observable::kind_name() const {
    static constexpr const char *kNames[] = {"fidelity", "dense", "witness"};
    return kNames[kind_.index()];
}

double Observable::trace() const {
    if (std::holds_alternative<StabilizerFidelity>(kind_)) {
        return 1.0;
    }
    if (const auto *w = std::get_if<Witness>(&kind_)) {
        return 8 * w->spec.alpha - 1;
    }
    return std::get<DenseHermitian>(kind_).op.trace();
}

double Observable::hs_norm_squared() const {
    if (std::holds_alternative<StabilizerFidelity>(kind_)) {
        return 1.0;
    }
    Eigen::MatrixXcd m = matrix();
    return (m * m).trace().real();
}

Eigen::MatrixXcd Observable::matrix() const {
    if (const auto *f = std::get_if<StabilizerFidelity>(&kind_)) {
        check_dense_size(num_qubits_);
        Eigen::VectorXcd v = tableau_to_dense(f->target).amplitudes;
        return v * v.adjoint();
    }
    if (const auto *w = std::get_if<Witness>(&kind_)) {
        return witness_operator(w->spec).matrix;
    }
    return std::get<DenseHermitian>(kind_).op.matrix;
}

double fidelity_estimate(size_t num_qubits, const DyadicProbability &p) {
    if (p.is_zero) {
        return -1.0;
    }
    // (2^n + 1) 2^-k - 1, assembled from exact powers of two.
    int k = static_cast<int>(p.exponent);
    int n = static_cast<int>(num_qubits);
    return std::ldexp(1.0, n - k) + std::ldexp(1.0, -k) - 1.0;
}

SnapshotEvaluator::SnapshotEvaluator(const Snapshot &s) : snapshot_(&s) {}

double SnapshotEvaluator::estimate(const Observable &obs) {
    const Snapshot &s = *snapshot_;
    size_t n = s.clifford.num_qubits();
    if (obs.num_qubits() != n || s.outcome.size() != n) {
        throw std::invalid_argument("observable acts on " + std::to_string(obs.num_qubits()) +
                                    " qubits but the snapshot has " + std::to_string(n));
    }
    if (const auto *f = std::get_if<StabilizerFidelity>(&obs.kind())) {
        return fidelity_estimate(n, basis_state_probability(apply_clifford(f->target, s.clifford), s.outcome));
    }
    if (!have_vector_) {
        vector_ = rotated_basis_state(s.clifford, s.outcome).amplitudes;
        have_vector_ = true;
    }
    double scale = std::ldexp(1.0, static_cast<int>(n)) + 1;
    if (const auto *w = std::get_if<Witness>(&obs.kind())) {
        double overlap = std::norm(w->target.dot(vector_));
        return scale * (w->spec.alpha - overlap) - obs.trace();
    }
    const DenseOperator &op = std::get<DenseHermitian>(obs.kind()).op;
    return scale * expectation(op.matrix, vector_) - op.trace();
}

double snapshot_estimate(const Snapshot &s, const Observable &obs) { return SnapshotEvaluator(s).estimate(obs); }

}  // namespace shadows
