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

#include <cmath>
#include <numbers>

#include "shadows/dense_oracle.hpp"
#include "shadows/prediction.hpp"
#include "shadows/state_library.hpp"
#include "test_support.hpp"

namespace shadows {
namespace {

TEST(MedianOfMeans, SingleBatchIsTheMean) {
    std::vector<double> v = {1, 5, 2, 8, 4};
    EXPECT_DOUBLE_EQ(median_of_means(v, 1), 4.0);
}

TEST(MedianOfMeans, OddAndEvenMedians) {
    EXPECT_EQ(median({1, 2, 3}), 2.0);
    EXPECT_EQ(median({3, 1, 2}), 2.0);
    EXPECT_EQ(median({1, 2, 3, 4}), 2.5);
    EXPECT_EQ(median({4, 1, 3, 2}), 2.5);
    EXPECT_THROW(median({}), std::invalid_argument);
    std::vector<double> batches = {1, 2, 3, 4};
    EXPECT_EQ(median_of_means(batches, 4), 2.5);
    std::vector<double> pairs = {0, 2, 1, 3, 100, 104};
    EXPECT_EQ(median_of_means(pairs, 3), 2.0);
}

TEST(MedianOfMeans, LeftoverValuesAreIgnored) {
    std::vector<double> v = {1, 1, 3, 3, 1000};
    EXPECT_EQ(median_of_means(v, 2), 2.0);
}

TEST(MedianOfMeans, BatchCountOutOfRangeThrows) {
    std::vector<double> v = {1, 2, 3};
    EXPECT_THROW(median_of_means(v, 0), std::invalid_argument);
    EXPECT_THROW(median_of_means(v, 4), std::invalid_argument);
}

ClassicalShadow small_shadow(size_t n, size_t count, uint64_t seed) {
    RandomStream rng(seed);
    return acquire_shadow(noisy_ghz_ensemble(n, 0.2), count, rng);
}

TEST(MedianOfMeansPredict, MatchesScalarMedianOfMeans) {
    ClassicalShadow shadow = small_shadow(4, 203, 1);
    RandomStream rng(2);
    std::vector<Observable> obs = {Observable::fidelity(ghz_tableau(4)), Observable::fidelity(ghz_tableau(4, -1)),
                                   Observable::dense(DenseOperator::from_matrix(4, testing::random_hermitian(16, rng)))};
    std::vector<double> predicted = median_of_means_predict(shadow, obs, 7);
    for (size_t j = 0; j < obs.size(); j++) {
        std::vector<double> values;
        for (const Snapshot &s : shadow.snapshots) {
            values.push_back(snapshot_estimate(s, obs[j]));
        }
        EXPECT_NEAR(predicted[j], median_of_means(values, 7), 1e-12);
    }
}

TEST(MedianOfMeansPredict, PermutationDeterminismAndThreads) {
    ClassicalShadow shadow = small_shadow(6, 120, 3);
    RandomStream rng(4);
    std::vector<Observable> obs;
    for (int i = 0; i < 5; i++) {
        obs.push_back(Observable::fidelity(testing::random_tableau(6, rng)));
    }
    obs.push_back(Observable::fidelity(ghz_tableau(6)));
    std::vector<double> base = median_of_means_predict(shadow, obs, 6, 1);
    EXPECT_EQ(median_of_means_predict(shadow, obs, 6, 3), base);
    std::vector<Observable> reversed(obs.rbegin(), obs.rend());
    std::vector<double> rev = median_of_means_predict(shadow, reversed, 6, 2);
    for (size_t j = 0; j < obs.size(); j++) {
        EXPECT_EQ(rev[obs.size() - 1 - j], base[j]);
    }
}

TEST(MedianOfMeansPredict, ErrorsAndEmptyList) {
    ClassicalShadow shadow = small_shadow(3, 10, 5);
    EXPECT_TRUE(median_of_means_predict(shadow, {}, 2).empty());
    std::vector<Observable> obs = {Observable::fidelity(ghz_tableau(3))};
    EXPECT_THROW(median_of_means_predict(shadow, obs, 11), std::invalid_argument);
    EXPECT_THROW(median_of_means_predict(shadow, obs, 0), std::invalid_argument);
    std::vector<Observable> wrong = {Observable::fidelity(ghz_tableau(4))};
    EXPECT_THROW(median_of_means_predict(shadow, wrong, 2), std::invalid_argument);
}

TEST(MedianOfMeansPredict, HundredStabilizerTargetsWithinPlannedAccuracy) {
    RandomStream rng(6);
    StabilizerTableau state = testing::random_tableau(4, rng);
    Eigen::VectorXcd psi = tableau_to_dense(state).amplitudes;
    std::vector<Observable> obs;
    std::vector<double> truth;
    for (int i = 0; i < 100; i++) {
        // Half of the targets are the state with a random Pauli applied, so
        // that fidelity 1 occurs alongside the dyadic overlaps.
        StabilizerTableau target = testing::random_tableau(4, rng);
        if (i % 2 == 0) {
            target = apply_clifford(state, CliffordElement::pauli(testing::random_pauli(4, rng)));
        }
        obs.push_back(Observable::fidelity(target));
        truth.push_back(testing::overlap(tableau_to_dense(target).amplitudes, psi));
    }
    PredictionPlan plan = plan_samples(100, 1.0, 0.1, 0.05);
    ClassicalShadow shadow = acquire_shadow(StatePreparation::pure(state), plan.num_snapshots, rng);
    std::vector<double> est = median_of_means_predict(shadow, obs, plan.num_batches);
    for (size_t i = 0; i < obs.size(); i++) {
        EXPECT_NEAR(est[i], truth[i], 0.1) << i;
    }
}

TEST(PlanSamples, UnitLogarithmExample) {
    PredictionPlan plan = plan_samples(1, 1.0, 1.0, 2 / std::numbers::e);
    EXPECT_EQ(plan.num_batches, 2u);
    EXPECT_EQ(plan.num_snapshots, 204u);
}

TEST(PlanSamples, DoublingObservablesAddsConstant) {
    for (uint64_t m : {1, 7, 1000}) {
        PredictionPlan a = plan_samples(m, 2.5, 0.2, 0.05);
        PredictionPlan b = plan_samples(2 * m, 2.5, 0.2, 0.05);
        EXPECT_NEAR(b.unrounded_snapshots - a.unrounded_snapshots, 204 * std::log(2.0) * 2.5 / 0.04, 1e-7);
    }
}

TEST(PlanSamples, MillionObservables) {
    // Values frozen from 50-digit evaluation of 2 ln(2e8) and 204 ln(2e8) / 0.01.
    PredictionPlan plan = plan_samples(1'000'000, 1.0, 0.1, 0.01);
    EXPECT_EQ(plan.num_batches, 39u);
    EXPECT_EQ(plan.num_snapshots, 389961u);
    EXPECT_EQ(plan.num_snapshots % plan.num_batches, 0u);
}

TEST(PlanSamples, SingleFidelityTarget) {
    PredictionPlan plan = plan_samples(1, 1.0, 0.1, 0.05);
    EXPECT_EQ(plan.num_batches, 8u);
    EXPECT_EQ(plan.num_snapshots, 75256u);
}

TEST(PlanSamples, RejectsBadParameters) {
    EXPECT_THROW(plan_samples(0, 1, 0.1, 0.05), std::invalid_argument);
    EXPECT_THROW(plan_samples(1, 0, 0.1, 0.05), std::invalid_argument);
    EXPECT_THROW(plan_samples(1, 1, 0, 0.05), std::invalid_argument);
    EXPECT_THROW(plan_samples(1, 1, 0.1, 0), std::invalid_argument);
    EXPECT_THROW(plan_samples(1, 1, 0.1, 1), std::invalid_argument);
}

TEST(DefaultBatches, FollowsTwoCeilLog) {
    EXPECT_EQ(default_batches(1, 0.05), 8u);
    EXPECT_EQ(default_batches(100, 0.05), 2 * uint64_t(std::ceil(std::log(4000.0))));
    EXPECT_THROW(default_batches(0), std::invalid_argument);
}

}  // namespace
}  // namespace shadows
