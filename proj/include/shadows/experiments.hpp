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
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "shadows/shadow.hpp"
#include "shadows/state_library.hpp"
#include "shadows/tableau.hpp"

namespace shadows {

inline constexpr const char *kShadowsVersion = "1.0.0";

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Formats a value with 12 significant digits.
std::string format_number(double value);

/// CSV with a leading "# shadows <version> key=value ..." line, then a
/// column header, then rows in the order given.
class CsvWriter {
   public:
    CsvWriter(std::ostream &out, const std::string &experiment, const ConfigEntries &config,
              const std::vector<std::string> &columns);
    void row(const std::vector<std::string> &fields);

   private:
    std::ostream *out_;
    size_t num_columns_;
};

/// Single-snapshot fidelity estimates against `target` for snapshot indices
/// 0, 1, 2, ... of the acquisition stream with base `base`: snapshot i uses
/// RandomStream::derive(base, i) exactly as acquire_shadow does, so the
/// estimates equal snapshot_estimate on the acquired shadow.
///
/// When the drawn state is the target itself, the probability of the observed
/// outcome is 2^-(random branches) and is read off the measurement. With
/// `verify`, it is always recomputed independently and every outcome is
/// checked to have that nonzero probability.
class FidelityStream {
   public:
    FidelityStream(const StatePreparation &prep, const StabilizerTableau &target, uint64_t base, bool verify = false);

    /// Computes estimates up to index count - 1.
    void extend(size_t count);
    const std::vector<double> &estimates() const { return estimates_; }
    /// Outcomes whose independently computed probability disagreed with the
    /// measurement (only counted with `verify`).
    uint64_t inconsistent_outcomes() const { return inconsistent_; }

   private:
    const StatePreparation *prep_;
    const StabilizerTableau *target_;
    uint64_t base_;
    bool verify_;
    std::vector<bool> member_is_target_;
    std::vector<double> estimates_;
    uint64_t inconsistent_ = 0;
};

/// Median-of-means fidelity estimates for arbitrary pure targets from a
/// streamed shadow of a small dense-capable state. Snapshot i draws from
/// RandomStream::derive(base, i); each batch keeps the sum of the projectors
/// U^dag|b><b|U, so any number of targets can be evaluated afterwards.
class BatchDensityEstimator {
   public:
    BatchDensityEstimator(const StatePreparation &prep, uint64_t base, uint64_t num_snapshots, uint64_t num_batches);
    /// Median over batches of the mean of (2^n + 1) |<phi|v>|^2 - 1.
    double fidelity(const Eigen::VectorXcd &phi) const;

   private:
    size_t num_qubits_;
    uint64_t batch_size_;
    std::vector<Eigen::MatrixXcd> sums_;
};

/// Stream base for sub-task (point, trial) of a run seeded with `seed`.
uint64_t task_base(uint64_t seed, uint64_t point, uint64_t trial);

// ---------------------------------------------------------------------------
// ghz-scaling: smallest N reaching fidelity >= threshold.

struct GhzScalingConfig {
    std::vector<size_t> sizes = {10, 20, 40, 80, 120, 162};
    size_t trials = 10;
    double threshold = 0.99;
    double success_fraction = 0.9;
    double delta = 0.05;
    uint64_t num_batches = 0;  // 0: 2 ceil(ln(2/delta))
    uint64_t initial_snapshots = 1024;
    uint64_t max_snapshots = uint64_t{1} << 21;
    uint64_t seed = 1;
    size_t threads = 0;

    ConfigEntries describe() const;
};

struct GhzScalingRow {
    size_t num_qubits = 0;
    uint64_t snapshots = 0;  // smallest N found, or max_snapshots if never reached
    uint64_t num_batches = 0;
    size_t successes = 0;
    size_t trials = 0;
    double mean = 0;    // mean of the trial estimates at `snapshots`
    double stddev = 0;  // sample standard deviation of the trial estimates
    bool reached = false;
};

/// Doubling-then-bisect search over multiples of K: a trial succeeds when its
/// median-of-means estimate is >= threshold, and N qualifies when at least
/// success_fraction of the trials succeed. Each trial reuses one estimate
/// stream, so smaller N are prefixes of larger ones.
std::vector<GhzScalingRow> run_ghz_scaling(const GhzScalingConfig &config);
void write_ghz_scaling_csv(std::ostream &out, const GhzScalingConfig &config, const std::vector<GhzScalingRow> &rows);

// ---------------------------------------------------------------------------
// ghz-noise: fidelity of the phase-noisy GHZ ensemble with GHZ+.

struct GhzNoiseConfig {
    size_t num_qubits = 20;
    std::vector<double> probabilities = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    uint64_t snapshots = 60000;
    size_t repetitions = 10;
    double delta = 0.05;
    uint64_t num_batches = 0;
    uint64_t seed = 1;
    size_t threads = 0;

    ConfigEntries describe() const;
};

struct GhzNoiseRow {
    double p = 0;
    size_t repetition = 0;
    double estimate = 0;
    double truth = 0;
};

std::vector<GhzNoiseRow> run_ghz_noise(const GhzNoiseConfig &config);
void write_ghz_noise_csv(std::ostream &out, const GhzNoiseConfig &config, const std::vector<GhzNoiseRow> &rows);

// ---------------------------------------------------------------------------
// toric: fidelity of toric-code ground states with themselves.

struct ToricConfig {
    std::vector<size_t> sizes = {2, 4, 6, 9};
    size_t runs = 10;
    double epsilon = 0.1;
    double delta = 0.05;
    uint64_t snapshots = 0;  // 0: plan_samples(1, 1, epsilon, delta)
    uint64_t parity_samples = 1000;
    uint64_t seed = 1;
    size_t threads = 0;

    ConfigEntries describe() const;
};

struct ToricRow {
    size_t linear_size = 0;
    size_t num_qubits = 0;
    uint64_t snapshots = 0;
    uint64_t num_batches = 0;
    double mean = 0;
    double stddev = 0;
    double min = 0;
    double max = 0;
    uint64_t parity_samples = 0;
    uint64_t parity_violations = 0;     // unrotated Z-basis samples breaking a plaquette or loop parity
    uint64_t inconsistent_outcomes = 0;  // acquisition outcomes without the measured Born probability
};

/// True if `outcome` has even parity on every plaquette and both Z loops.
bool satisfies_toric_parities(const ToricLattice &lattice, const Bitstring &outcome);

std::vector<ToricRow> run_toric(const ToricConfig &config);
void write_toric_csv(std::ostream &out, const ToricConfig &config, const std::vector<ToricRow> &rows);

// ---------------------------------------------------------------------------
// witness: shadow vs direct cost for M random witnesses on a rotated GHZ state.

struct WitnessConfig {
    size_t max_observables = 1024;
    size_t repetitions = 10;
    double epsilon = 0.1;
    double delta = 0.05;
    uint64_t min_shots = 10;
    uint64_t max_shots = 10'000'000;
    uint64_t seed = 1;
    size_t threads = 0;

    ConfigEntries describe() const;
};

struct WitnessRow {
    size_t repetition = 0;
    size_t num_observables = 0;  // M: witnesses 1..M are considered
    uint64_t shadow_cost = 0;    // plan_samples(M, B, epsilon, delta).N
    uint64_t direct_cost = 0;    // shots to measure witnesses 1..M directly
    bool shadow_detect_genuine = false;  // some witness (alpha = 0.5) among 1..M estimated negative
    bool shadow_detect_ghz = false;      // same for alpha = 0.75
    bool exact_detect_genuine = false;   // some exact value (alpha = 0.5) negative
    bool exact_detect_ghz = false;
};

struct WitnessRepetition {
    size_t repetition = 0;
    double max_hs_norm = 0;   // B over all 2M witnesses of the repetition
    uint64_t snapshots = 0;   // shadow size used for detection, plan for M = max
    uint64_t num_batches = 0;
    size_t shadow_first_genuine = 0;  // 1-based index of first detecting witness, 0 if none
    size_t shadow_first_ghz = 0;
    size_t exact_first_genuine = 0;
    size_t exact_first_ghz = 0;
    double max_estimation_error = 0;  // max_m |F_hat_m - F_m| over the witness targets
};

struct WitnessResult {
    std::vector<WitnessRow> rows;
    std::vector<WitnessRepetition> repetitions;
};

/// Per repetition: one Haar-rotated GHZ state and max_observables witnesses
/// with Haar-random locals, shared by both alpha values and by the shadow and
/// direct protocols. One shadow sized for all witnesses estimates every
/// target fidelity F_m; the alpha-witness estimate is alpha - F_hat_m.
WitnessResult run_witness(const WitnessConfig &config);
void write_witness_csv(std::ostream &out, const WitnessConfig &config, const WitnessResult &result);

}  // namespace shadows
