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

#include "shadows/prediction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "shadows/parallel.hpp"

namespace shadows {

namespace {

/// ceil that forgives a few ulps of rounding in x, so exact integers
/// computed through logarithms stay put.
uint64_t tolerant_ceil(double x) {
    double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-12 * std::max(1.0, std::abs(x))) {
        return static_cast<uint64_t>(nearest);
    }
    return static_cast<uint64_t>(std::ceil(x));
}

}  // namespace

double median(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("median of an empty list");
    }
    size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    double upper = values[mid];
    if (values.size() % 2 == 1) {
        return upper;
    }
    double lower = *std::max_element(values.begin(), values.begin() + mid);
    return (lower + upper) / 2;
}

double median_of_means(std::span<const double> values, size_t num_batches) {
    if (num_batches == 0 || num_batches > values.size()) {
        throw std::invalid_argument("batch count must lie in [1, " + std::to_string(values.size()) + "]");
    }
    size_t batch_size = values.size() / num_batches;
    std::vector<double> means(num_batches);
    for (size_t k = 0; k < num_batches; k++) {
        double sum = 0;
        for (size_t i = k * batch_size; i < (k + 1) * batch_size; i++) {
            sum += values[i];
        }
        means[k] = sum / static_cast<double>(batch_size);
    }
    return median(std::move(means));
}

std::vector<double> median_of_means_predict(const ClassicalShadow &shadow, const std::vector<Observable> &observables,
                                            size_t num_batches, size_t threads) {
    size_t total = shadow.snapshots.size();
    if (num_batches == 0 || num_batches > total) {
        throw std::invalid_argument("batch count " + std::to_string(num_batches) + " must lie in [1, " +
                                    std::to_string(total) + "]");
    }
    for (const Observable &obs : observables) {
        if (obs.num_qubits() != shadow.num_qubits) {
            throw std::invalid_argument("observable acts on " + std::to_string(obs.num_qubits()) +
                                        " qubits but the shadow has " + std::to_string(shadow.num_qubits));
        }
    }
    if (observables.empty()) {
        return {};
    }
    size_t batch_size = total / num_batches;
    size_t m = observables.size();
    // means[k * m + j] is the batch-k mean for observable j.
    std::vector<double> means(num_batches * m, 0.0);
    parallel_for(
        num_batches,
        [&](size_t k) {
            std::vector<double> sums(m, 0.0);
            for (size_t i = k * batch_size; i < (k + 1) * batch_size; i++) {
                SnapshotEvaluator eval(shadow.snapshots[i]);
                for (size_t j = 0; j < m; j++) {
                    sums[j] += eval.estimate(observables[j]);
                }
            }
            for (size_t j = 0; j < m; j++) {
                means[k * m + j] = sums[j] / static_cast<double>(batch_size);
            }
        },
        threads);
    std::vector<double> result(m);
    for (size_t j = 0; j < m; j++) {
        std::vector<double> column(num_batches);
        for (size_t k = 0; k < num_batches; k++) {
            column[k] = means[k * m + j];
        }
        result[j] = median(std::move(column));
    }
    return result;
}

PredictionPlan plan_samples(uint64_t num_observables, double max_hs_norm, double epsilon, double delta) {
    if (num_observables == 0) {
        throw std::invalid_argument("need at least one observable");
    }
    if (!(max_hs_norm > 0) || !std::isfinite(max_hs_norm)) {
        throw std::invalid_argument("B = max tr(O^2) must be positive");
    }
    if (!(epsilon > 0 && epsilon <= 1)) {
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    }
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
    double log_term = std::log(2.0 * static_cast<double>(num_observables) / delta);
    PredictionPlan plan;
    plan.epsilon = epsilon;
    plan.delta = delta;
    plan.max_hs_norm = max_hs_norm;
    plan.num_observables = num_observables;
    plan.num_batches = std::max<uint64_t>(1, tolerant_ceil(2 * log_term));
    plan.unrounded_snapshots = 204 * log_term * max_hs_norm / (epsilon * epsilon);
    uint64_t n = std::max<uint64_t>(1, tolerant_ceil(plan.unrounded_snapshots));
    uint64_t k = plan.num_batches;
    plan.num_snapshots = (n + k - 1) / k * k;
    return plan;
}

uint64_t default_batches(uint64_t num_observables, double delta) {
    if (num_observables == 0 || !(delta > 0 && delta < 1)) {
        throw std::invalid_argument("default batch count needs M >= 1 and delta in (0, 1)");
    }
    return 2 * std::max<uint64_t>(1, tolerant_ceil(std::log(2.0 * static_cast<double>(num_observables) / delta)));
}

}  // namespace shadows
