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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shadows/observable.hpp"
#include "shadows/shadow.hpp"

namespace shadows {

/// Median of the K means of consecutive batches of floor(N/K) values;
/// trailing values are ignored. Even K takes the midpoint of the two
/// central batch means. Throws if K == 0 or K > values.size().
double median_of_means(std::span<const double> values, size_t num_batches);

/// Median of `values` (midpoint of the two central values for even sizes).
double median(std::vector<double> values);

/// Algorithm: split the shadow into K batches of floor(N/K) snapshots (in
/// acquisition order), average single-snapshot estimates within a batch and
/// return, per observable, the median of batch means. Batches are evaluated
/// in parallel; each batch sums in snapshot order.
std::vector<double> median_of_means_predict(const ClassicalShadow &shadow, const std::vector<Observable> &observables,
                                            size_t num_batches, size_t threads = 0);

struct PredictionPlan {
    uint64_t num_snapshots = 0;  // N, a multiple of K
    uint64_t num_batches = 0;    // K
    double epsilon = 0;
    double delta = 0;
    double max_hs_norm = 0;        // B = max_i tr(O_i^2)
    uint64_t num_observables = 0;  // M
    double unrounded_snapshots = 0;  // 204 ln(2M/delta) B / eps^2
};

/// K = ceil(2 ln(2M/delta)) and N = ceil(204 ln(2M/delta) B / eps^2),
/// rounded up to a multiple of K.
PredictionPlan plan_samples(uint64_t num_observables, double max_hs_norm, double epsilon, double delta);

/// Default batch count for M observables: 2 ceil(ln(2M/delta)).
uint64_t default_batches(uint64_t num_observables, double delta = 0.05);

}  // namespace shadows
