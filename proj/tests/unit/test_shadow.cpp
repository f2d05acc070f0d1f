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


#include <gtest/gtest.h>

#include "shadows/dense_oracle.hpp"
#include "shadows/observable.hpp"
#include "shadows/shadow.hpp"
#include "shadows/state_library.hpp"
#include "shadows/witness.hpp"
#include "test_support.hpp"

namespace shadows {
namespace {

using testing::cd;

/// Index of the single-qubit eigenstate |0>, |1>, |+>, |->, |+i>, |-i>.
int eigenstate_index(const Eigen::VectorXcd &v) {
    double r = 1 / std::sqrt(2.0);
    std::vector<Eigen::Vector2cd> eigen(6);
    eigen[0] << 1, 0;
    eigen[1] << 0, 1;
    eigen[2] << r, r;
    eigen[3] << r, -r;
    eigen[4] << r, cd(0, r);
    eigen[5] << r, cd(0, -r);
    for (int k = 0; k < 6; k++) {
        if (testing::overlap(v, eigen[k]) > 1 - 1e-9) {
            return k;
        }
    }
    return -1;
}

std::vector<double> induced_frequencies(const StatePreparation &prep, size_t count, uint64_t seed) {
    RandomStream rng(seed);
    ClassicalShadow shadow = acquire_shadow(prep, count, rng);
    std::vector<double> freq(6, 0);
    for (const Snapshot &s : shadow.snapshots) {
        int k = eigenstate_index(rotated_basis_state(s.clifford, s.outcome).amplitudes);
        EXPECT_GE(k, 0);
        freq[k] += 1.0 / double(count);
    }
    return freq;
}

TEST(AcquireShadow, ZeroStateInducesBornWeights) {
    std::vector<double> f = induced_frequencies(StatePreparation::pure(StabilizerTableau(1)), 100000, 1);
    EXPECT_NEAR(f[0], 1.0 / 3, 0.01);
    EXPECT_EQ(f[1], 0.0);
    for (int k = 2; k < 6; k++) {
        EXPECT_NEAR(f[k], 1.0 / 6, 0.01);
    }
}

TEST(AcquireShadow, DenseZeroStateInducesBornWeights) {
    Eigen::VectorXcd zero(2);
    zero << 1, 0;
    std::vector<double> f =
        induced_frequencies(StatePreparation::dense(DenseState::from_amplitudes(1, zero)), 100000, 2);
    EXPECT_NEAR(f[0], 1.0 / 3, 0.01);
    EXPECT_EQ(f[1], 0.0);
    for (int k = 2; k < 6; k++) {
        EXPECT_NEAR(f[k], 1.0 / 6, 0.01);
    }
}

TEST(AcquireShadow, MaximallyMixedEnsembleIsUniform) {
    StatePreparation prep = StatePreparation::ensemble(
        {{0.5, StabilizerTableau(1)}, {0.5, StabilizerTableau::basis_state(Bitstring::from_string("1"))}});
    std::vector<double> f = induced_frequencies(prep, 100000, 3);
    for (double x : f) {
        EXPECT_NEAR(x, 1.0 / 6, 0.01);
    }
}

TEST(AcquireShadow, LargeGhzSmokeRun) {
    RandomStream rng(4);
    ClassicalShadow shadow = acquire_shadow(StatePreparation::pure(ghz_tableau(162)), 1000, rng);
    EXPECT_EQ(shadow.size(), 1000u);
    EXPECT_EQ(shadow.num_qubits, 162u);
    EXPECT_NO_THROW(validate_shadow(shadow));
    for (const Snapshot &s : shadow.snapshots) {
        ASSERT_TRUE(s.clifford.is_valid());
        ASSERT_EQ(s.outcome.size(), 162u);
    }
}

TEST(AcquireShadow, DeterministicAndThreadIndependent) {
    StatePreparation prep = noisy_ghz_ensemble(12, 0.3);
    RandomStream a(5), b(5);
    ClassicalShadow one = acquire_shadow(prep, 300, a, 1);
    ClassicalShadow four = acquire_shadow(prep, 300, b, 4);
    EXPECT_EQ(one, four);
    EXPECT_EQ(one.seed, 5u);
    RandomStream c(6);
    EXPECT_FALSE(acquire_shadow(prep, 300, c, 2) == one);
}

TEST(AcquireShadow, SnapshotsReplayFromDerivedStreams) {
    StatePreparation prep = StatePreparation::pure(ghz_tableau(9));
    RandomStream rng(7);
    ClassicalShadow shadow = acquire_shadow(prep, 20, rng);
    RandomStream replay(7);
    uint64_t base = replay();
    for (size_t i = 0; i < shadow.size(); i++) {
        RandomStream sub = RandomStream::derive(base, i);
        EXPECT_EQ(take_snapshot(prep, sub), shadow.snapshots[i]);
    }
}

TEST(AcquireShadow, RejectsEmptyRequests) {
    RandomStream rng(8);
    EXPECT_THROW(acquire_shadow(StatePreparation::pure(StabilizerTableau(2)), 0, rng), std::invalid_argument);
}

TEST(StatePreparation, EnsembleValidation) {
    EXPECT_THROW(StatePreparation::ensemble({{0.7, StabilizerTableau(1)}, {0.2, StabilizerTableau(1)}}),
                 std::invalid_argument);
    EXPECT_THROW(StatePreparation::ensemble({{1.5, StabilizerTableau(1)}, {-0.5, StabilizerTableau(1)}}),
                 std::invalid_argument);
    EXPECT_THROW(StatePreparation::ensemble({{0.5, StabilizerTableau(1)}, {0.5, StabilizerTableau(2)}}),
                 std::invalid_argument);
    EXPECT_THROW(StatePreparation::dense(DenseState{13, Eigen::VectorXcd::Zero(2)}), std::invalid_argument);
}

TEST(ValidateShadow, RejectsMixedSizesAndBadElements) {
    RandomStream rng(9);
    ClassicalShadow shadow = acquire_shadow(StatePreparation::pure(StabilizerTableau(3)), 5, rng);
    ClassicalShadow wrong = shadow;
    wrong.snapshots[2].outcome = Bitstring(4);
    EXPECT_THROW(validate_shadow(wrong), std::invalid_argument);
    ClassicalShadow broken = shadow;
    broken.snapshots[1].clifford.set_alpha(0, 1, !broken.snapshots[1].clifford.alpha(0, 1));
    EXPECT_THROW(validate_shadow(broken), std::invalid_argument);
}

TEST(SnapshotEstimate, FidelityExtremes) {
    size_t n = 5;
    RandomStream rng(10);
    for (int t = 0; t < 20; t++) {
        CliffordElement c = sample_clifford(n, rng);
        Bitstring b(n);
        b.set(rng.below(n), true);
        Snapshot s{c, b};
        // The measured stabilizer state U^dag|b> itself.
        StabilizerTableau measured = apply_clifford(StabilizerTableau::basis_state(b), inverse(c));
        EXPECT_DOUBLE_EQ(snapshot_estimate(s, Observable::fidelity(measured)), 32.0);
        // U^dag|b'> with b' != b is orthogonal to it.
        Bitstring other = b;
        other.flip(0);
        StabilizerTableau orthogonal = apply_clifford(StabilizerTableau::basis_state(other), inverse(c));
        EXPECT_DOUBLE_EQ(snapshot_estimate(s, Observable::fidelity(orthogonal)), -1.0);
    }
}

TEST(SnapshotEstimate, FidelityMatchesDenseFormula) {
    RandomStream rng(11);
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + t % 4;
        StabilizerTableau target = testing::random_tableau(n, rng);
        Snapshot s = take_snapshot(StatePreparation::pure(testing::random_tableau(n, rng)), rng);
        Eigen::VectorXcd psi = tableau_to_dense(target).amplitudes;
        Eigen::VectorXcd v = rotated_basis_state(s.clifford, s.outcome).amplitudes;
        double expected = (std::pow(2.0, double(n)) + 1) * testing::overlap(v, psi) - 1;
        EXPECT_NEAR(snapshot_estimate(s, Observable::fidelity(target)), expected, 1e-10);
        Eigen::MatrixXcd proj = psi * psi.adjoint();
        EXPECT_NEAR(snapshot_estimate(s, Observable::dense(DenseOperator::from_matrix(n, proj))), expected, 1e-10);
    }
}

TEST(SnapshotEstimate, DenseMatchesFormulaAndEvaluatorCaches) {
    RandomStream rng(12);
    for (int t = 0; t < 30; t++) {
        size_t n = 1 + t % 3;
        size_t dim = size_t{1} << n;
        Eigen::MatrixXcd o = testing::random_hermitian(dim, rng);
        Snapshot s = take_snapshot(StatePreparation::pure(testing::random_tableau(n, rng)), rng);
        Eigen::VectorXcd v = rotated_basis_state(s.clifford, s.outcome).amplitudes;
        double expected = (double(dim) + 1) * v.dot(o * v).real() - o.trace().real();
        Observable obs = Observable::dense(DenseOperator::from_matrix(n, o));
        EXPECT_NEAR(snapshot_estimate(s, obs), expected, 1e-10);
        SnapshotEvaluator eval(s);
        EXPECT_NEAR(eval.estimate(obs), expected, 1e-10);
        EXPECT_NEAR(eval.estimate(obs), expected, 1e-10);
    }
}

TEST(SnapshotEstimate, SizeMismatchThrows) {
    RandomStream rng(13);
    Snapshot s = take_snapshot(StatePreparation::pure(StabilizerTableau(2)), rng);
    EXPECT_THROW(snapshot_estimate(s, Observable::fidelity(StabilizerTableau(3))), std::invalid_argument);
}

TEST(Observable, TracesAndNorms) {
    Observable f = Observable::fidelity(ghz_tableau(40));
    EXPECT_EQ(f.trace(), 1.0);
    EXPECT_EQ(f.hs_norm_squared(), 1.0);
    EXPECT_EQ(f.kind_name(), "fidelity");
    RandomStream rng(14);
    for (double alpha : {0.5, 0.75}) {
        WitnessSpec spec = random_witness(rng, alpha);
        Observable w = Observable::witness(spec);
        Eigen::MatrixXcd m = w.matrix();
        EXPECT_NEAR(w.trace(), m.trace().real(), 1e-10);
        EXPECT_NEAR(w.trace(), 8 * alpha - 1, 1e-10);
        EXPECT_NEAR(w.hs_norm_squared(), (m * m).trace().real(), 1e-10);
        EXPECT_EQ(w.kind_name(), "witness");
    }
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(2, 2);
    bad(0, 1) = 1;
    EXPECT_THROW(Observable::dense(DenseOperator{1, bad}), std::invalid_argument);
}

TEST(FidelityEstimate, DyadicForm) {
    EXPECT_EQ(fidelity_estimate(3, DyadicProbability{false, 0}), 8.0);
    EXPECT_EQ(fidelity_estimate(3, DyadicProbability{false, 3}), 0.0 + 1.0 / 8);
    EXPECT_EQ(fidelity_estimate(3, DyadicProbability{true, 0}), -1.0);
    EXPECT_EQ(fidelity_estimate(162, DyadicProbability{false, 161}), 2.0 + std::ldexp(1.0, -161) - 1);
}

}  // namespace
}  // namespace shadows
