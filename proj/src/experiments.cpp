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

#include "shadows/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "shadows/clifford_sampler.hpp"
#include "shadows/dense_oracle.hpp"
#include "shadows/observable.hpp"
#include "shadows/parallel.hpp"
#include "shadows/prediction.hpp"

namespace shadows {

namespace {

template <typename T>
std::string join(const std::vector<T> &values) {
    std::string out;
    for (size_t i = 0; i < values.size(); i++) {
        if (i) {
            out += ',';
        }
        if constexpr (std::is_floating_point_v<T>) {
            out += format_number(values[i]);
        } else {
            out += std::to_string(values[i]);
        }
    }
    return out;
}

std::string num(uint64_t v) { return std::to_string(v); }

double sample_stddev(const std::vector<double> &values) {
    if (values.size() < 2) {
        return 0;
    }
    double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    double ss = 0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double mean_of(const std::vector<double> &values) {
    return values.empty() ? 0.0 : std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

uint64_t batches_or_default(uint64_t requested, double delta) {
    return requested ? requested : default_batches(1, delta);
}

void require(bool ok, const std::string &message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

}  // namespace

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

CsvWriter::CsvWriter(std::ostream &out, const std::string &experiment, const ConfigEntries &config,
                     const std::vector<std::string> &columns)
    : out_(&out), num_columns_(columns.size()) {
    out << "# shadows " << kShadowsVersion << " experiment=" << experiment;
    for (const auto &[key, value] : config) {
        out << ' ' << key << '=' << value;
    }
    out << '\n';
    row(columns);
}

void CsvWriter::row(const std::vector<std::string> &fields) {
    if (fields.size() != num_columns_) {
        throw std::logic_error("CSV row has the wrong number of fields");
    }
    for (size_t i = 0; i < fields.size(); i++) {
        *out_ << (i ? "," : "") << fields[i];
    }
    *out_ << '\n';
}

uint64_t task_base(uint64_t seed, uint64_t point, uint64_t trial) {
    return RandomStream::derive(RandomStream::derive(seed, point).seed(), trial)();
}

FidelityStream::FidelityStream(const StatePreparation &prep, const StabilizerTableau &target, uint64_t base,
                               bool verify)
    : prep_(&prep), target_(&target), base_(base), verify_(verify) {
    if (std::holds_alternative<DenseState>(prep.source())) {
        throw std::invalid_argument("fidelity streams need a stabilizer preparation");
    }
    if (prep.num_qubits() != target.num_qubits()) {
        throw std::invalid_argument("target and preparation act on different qubit counts");
    }
    size_t members = 1;
    if (const auto *e = std::get_if<StatePreparation::Ensemble>(&prep.source())) {
        members = e->size();
    }
    for (size_t i = 0; i < members; i++) {
        member_is_target_.push_back(stabilizer_member(prep, i) == target);
    }
}

void FidelityStream::extend(size_t count) {
    size_t n = prep_->num_qubits();
    while (estimates_.size() < count) {
        // Same draws, in the same order, as take_snapshot.
        RandomStream rng = RandomStream::derive(base_, estimates_.size());
        size_t member = draw_member_index(*prep_, rng);
        const StabilizerTableau &state = stabilizer_member(*prep_, member);
        CliffordElement c = sample_clifford(n, rng);
        MeasurementResult m = measure_all_z(apply_clifford(state, c), rng);
        DyadicProbability measured{false, static_cast<unsigned>(m.random_branches)};
        DyadicProbability p;
        if (member_is_target_[member] && !verify_) {
            p = measured;
        } else {
            p = basis_state_probability(apply_clifford(*target_, c), m.outcome);
        }
        if (verify_) {
            DyadicProbability own =
                member_is_target_[member] ? p : basis_state_probability(apply_clifford(state, c), m.outcome);
            if (own.is_zero || own.exponent != measured.exponent) {
                inconsistent_++;
            }
        }
        estimates_.push_back(fidelity_estimate(n, p));
    }
}

// ---------------------------------------------------------------------------

BatchDensityEstimator::BatchDensityEstimator(const StatePreparation &prep, uint64_t base, uint64_t num_snapshots,
                                             uint64_t num_batches)
    : num_qubits_(prep.num_qubits()) {
    check_dense_size(num_qubits_);
    require(num_batches >= 1 && num_batches <= num_snapshots, "batch count must lie in [1, N]");
    batch_size_ = num_snapshots / num_batches;
    auto dim = Eigen::Index{1} << num_qubits_;
    sums_.assign(num_batches, Eigen::MatrixXcd::Zero(dim, dim));
    for (uint64_t i = 0; i < num_batches * batch_size_; i++) {
        RandomStream rng = RandomStream::derive(base, i);
        Snapshot s = take_snapshot(prep, rng);
        Eigen::VectorXcd v = rotated_basis_state(s.clifford, s.outcome).amplitudes;
        sums_[i / batch_size_].noalias() += v * v.adjoint();
    }
}

double BatchDensityEstimator::fidelity(const Eigen::VectorXcd &phi) const {
    require(phi.size() == sums_.front().rows(), "target has the wrong dimension");
    double scale = std::ldexp(1.0, static_cast<int>(num_qubits_)) + 1;
    std::vector<double> means(sums_.size());
    for (size_t b = 0; b < sums_.size(); b++) {
        means[b] = scale * phi.dot(sums_[b] * phi).real() / static_cast<double>(batch_size_) - 1.0;
    }
    return median(std::move(means));
}

ConfigEntries GhzScalingConfig::describe() const {
    return {{"seed", num(seed)},
            {"sizes", join(sizes)},
            {"trials", num(trials)},
            {"threshold", format_number(threshold)},
            {"success_fraction", format_number(success_fraction)},
            {"delta", format_number(delta)},
            {"k_batches", num(batches_or_default(num_batches, delta))},
            {"initial_snapshots", num(initial_snapshots)},
            {"max_snapshots", num(max_snapshots)}};
}

std::vector<GhzScalingRow> run_ghz_scaling(const GhzScalingConfig &config) {
    require(!config.sizes.empty(), "ghz-scaling needs at least one size");
    require(config.trials >= 1, "ghz-scaling needs at least one trial");
    require(config.success_fraction > 0 && config.success_fraction <= 1, "success_fraction must lie in (0, 1]");
    uint64_t k = batches_or_default(config.num_batches, config.delta);
    require(config.max_snapshots >= k, "max_snapshots must be at least K");
    size_t required = static_cast<size_t>(std::ceil(config.success_fraction * static_cast<double>(config.trials) - 1e-9));

    std::vector<GhzScalingRow> rows;
    for (size_t point = 0; point < config.sizes.size(); point++) {
        size_t n = config.sizes[point];
        StatePreparation prep = StatePreparation::pure(ghz_tableau(n));
        const StabilizerTableau &target = std::get<StabilizerTableau>(prep.source());
        std::vector<FidelityStream> streams;
        for (size_t t = 0; t < config.trials; t++) {
            streams.emplace_back(prep, target, task_base(config.seed, point, t));
        }
        std::vector<double> at_n(config.trials);
        auto successes = [&](uint64_t count) {
            parallel_for(
                config.trials,
                [&](size_t t) {
                    streams[t].extend(count);
                    at_n[t] = median_of_means(std::span(streams[t].estimates()).first(count), k);
                },
                config.threads);
            return static_cast<size_t>(
                std::count_if(at_n.begin(), at_n.end(), [&](double e) { return e >= config.threshold; }));
        };

        uint64_t lo = 0;
        uint64_t hi = 0;
        uint64_t probe = std::max<uint64_t>(k, (config.initial_snapshots + k - 1) / k * k);
        while (probe <= config.max_snapshots) {
            if (successes(probe) >= required) {
                hi = probe;
                break;
            }
            lo = probe;
            probe *= 2;
        }
        GhzScalingRow row;
        row.num_qubits = n;
        row.num_batches = k;
        row.trials = config.trials;
        if (hi == 0) {
            row.snapshots = lo;
        } else {
            while (hi - lo > k) {
                uint64_t mid = (lo + hi) / 2 / k * k;
                if (mid <= lo) {
                    break;
                }
                if (successes(mid) >= required) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            row.snapshots = hi;
            row.reached = true;
        }
        row.successes = successes(row.snapshots);
        row.mean = mean_of(at_n);
        row.stddev = sample_stddev(at_n);
        rows.push_back(row);
    }
    return rows;
}

void write_ghz_scaling_csv(std::ostream &out, const GhzScalingConfig &config, const std::vector<GhzScalingRow> &rows) {
    CsvWriter csv(out, "ghz-scaling", config.describe(),
                  {"n", "snapshots", "k_batches", "successes", "trials", "mean_estimate", "stddev", "reached"});
    for (const GhzScalingRow &r : rows) {
        csv.row({num(r.num_qubits), num(r.snapshots), num(r.num_batches), num(r.successes), num(r.trials),
                 format_number(r.mean), format_number(r.stddev), r.reached ? "1" : "0"});
    }
}

// ---------------------------------------------------------------------------

ConfigEntries GhzNoiseConfig::describe() const {
    return {{"seed", num(seed)},
            {"n", num(num_qubits)},
            {"probabilities", join(probabilities)},
            {"n_snapshots", num(snapshots)},
            {"repetitions", num(repetitions)},
            {"delta", format_number(delta)},
            {"k_batches", num(batches_or_default(num_batches, delta))}};
}

std::vector<GhzNoiseRow> run_ghz_noise(const GhzNoiseConfig &config) {
    require(config.repetitions >= 1, "ghz-noise needs at least one repetition");
    uint64_t k = batches_or_default(config.num_batches, config.delta);
    require(config.snapshots >= k, "n_snapshots must be at least K");
    StabilizerTableau target = ghz_tableau(config.num_qubits, +1);
    std::vector<StatePreparation> preps;
    for (double p : config.probabilities) {
        preps.push_back(noisy_ghz_ensemble(config.num_qubits, p));
    }
    size_t reps = config.repetitions;
    std::vector<GhzNoiseRow> rows(config.probabilities.size() * reps);
    parallel_for(
        rows.size(),
        [&](size_t task) {
            size_t point = task / reps;
            size_t rep = task % reps;
            FidelityStream stream(preps[point], target, task_base(config.seed, point, rep));
            stream.extend(config.snapshots);
            double p = config.probabilities[point];
            rows[task] = {p, rep, median_of_means(stream.estimates(), k), 1 - p};
        },
        config.threads);
    return rows;
}

void write_ghz_noise_csv(std::ostream &out, const GhzNoiseConfig &config, const std::vector<GhzNoiseRow> &rows) {
    CsvWriter csv(out, "ghz-noise", config.describe(), {"p", "repetition", "estimate", "true_fidelity"});
    for (const GhzNoiseRow &r : rows) {
        csv.row({format_number(r.p), num(r.repetition), format_number(r.estimate), format_number(r.truth)});
    }
}

// ---------------------------------------------------------------------------

ConfigEntries ToricConfig::describe() const {
    return {{"seed", num(seed)},
            {"sizes", join(sizes)},
            {"runs", num(runs)},
            {"epsilon", format_number(epsilon)},
            {"delta", format_number(delta)},
            {"n_snapshots", num(snapshots)},
            {"parity_samples", num(parity_samples)}};
}

bool satisfies_toric_parities(const ToricLattice &lattice, const Bitstring &outcome) {
    size_t L = lattice.size;
    auto even = [&](const std::vector<size_t> &edges) {
        bool parity = false;
        for (size_t e : edges) {
            parity ^= outcome[e];
        }
        return !parity;
    };
    for (size_t r = 0; r < L; r++) {
        for (size_t c = 0; c < L; c++) {
            if (!even(lattice.plaquette(r, c))) {
                return false;
            }
        }
    }
    return even(lattice.vertical_loop()) && even(lattice.horizontal_loop());
}

std::vector<ToricRow> run_toric(const ToricConfig &config) {
    require(config.runs >= 1, "toric needs at least one run");
    PredictionPlan plan = plan_samples(1, 1.0, config.epsilon, config.delta);
    uint64_t count = config.snapshots ? config.snapshots : plan.num_snapshots;
    uint64_t k = plan.num_batches;
    require(count >= k, "n_snapshots must be at least K");

    std::vector<ToricRow> rows;
    for (size_t point = 0; point < config.sizes.size(); point++) {
        size_t L = config.sizes[point];
        ToricLattice lattice(L);
        StatePreparation prep = StatePreparation::pure(toric_code_tableau(L));
        const StabilizerTableau &state = std::get<StabilizerTableau>(prep.source());

        std::vector<double> estimates(config.runs);
        std::vector<uint64_t> inconsistent(config.runs);
        parallel_for(
            config.runs,
            [&](size_t run) {
                FidelityStream stream(prep, state, task_base(config.seed, point, run), true);
                stream.extend(count);
                estimates[run] = median_of_means(stream.estimates(), k);
                inconsistent[run] = stream.inconsistent_outcomes();
            },
            config.threads);

        ToricRow row;
        row.linear_size = L;
        row.num_qubits = lattice.num_qubits();
        row.snapshots = count;
        row.num_batches = k;
        row.mean = mean_of(estimates);
        row.stddev = sample_stddev(estimates);
        row.min = *std::min_element(estimates.begin(), estimates.end());
        row.max = *std::max_element(estimates.begin(), estimates.end());
        row.inconsistent_outcomes = std::accumulate(inconsistent.begin(), inconsistent.end(), uint64_t{0});
        // Unrotated Z-basis measurements of the ground state itself.
        RandomStream parity_rng = RandomStream::derive(RandomStream::derive(config.seed, point).seed(), ~uint64_t{0});
        row.parity_samples = config.parity_samples;
        for (uint64_t s = 0; s < config.parity_samples; s++) {
            if (!satisfies_toric_parities(lattice, measure_all_z(state, parity_rng).outcome)) {
                row.parity_violations++;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

void write_toric_csv(std::ostream &out, const ToricConfig &config, const std::vector<ToricRow> &rows) {
    CsvWriter csv(out, "toric", config.describe(),
                  {"L", "n", "snapshots", "k_batches", "mean_estimate", "stddev", "min_estimate", "max_estimate",
                   "parity_samples", "parity_violations", "inconsistent_outcomes"});
    for (const ToricRow &r : rows) {
        csv.row({num(r.linear_size), num(r.num_qubits), num(r.snapshots), num(r.num_batches), format_number(r.mean),
                 format_number(r.stddev), format_number(r.min), format_number(r.max), num(r.parity_samples),
                 num(r.parity_violations), num(r.inconsistent_outcomes)});
    }
}

// ---------------------------------------------------------------------------

ConfigEntries WitnessConfig::describe() const {
    return {{"seed", num(seed)},
            {"max_observables", num(max_observables)},
            {"repetitions", num(repetitions)},
            {"epsilon", format_number(epsilon)},
            {"delta", format_number(delta)},
            {"min_shots", num(min_shots)},
            {"max_shots", num(max_shots)}};
}

namespace {

struct WitnessTask {
    WitnessRepetition summary;
    std::vector<WitnessRow> rows;
};

WitnessTask run_witness_repetition(const WitnessConfig &config, size_t rep) {
    size_t m_max = config.max_observables;
    RandomStream state_rng = RandomStream::derive(task_base(config.seed, 0, rep), 0);
    RandomStream witness_rng = RandomStream::derive(task_base(config.seed, 0, rep), 1);
    DenseState psi = random_rotated_ghz3(state_rng);
    std::vector<WitnessSpec> genuine;
    std::vector<WitnessSpec> ghz_type;
    for (size_t m = 0; m < m_max; m++) {
        genuine.push_back(random_witness(witness_rng, 0.5));
        ghz_type.push_back(genuine.back());
        ghz_type.back().alpha = 0.75;
    }

    WitnessTask task;
    WitnessRepetition &summary = task.summary;
    summary.repetition = rep;
    for (size_t m = 0; m < m_max; m++) {
        summary.max_hs_norm = std::max({summary.max_hs_norm, Observable::witness(genuine[m]).hs_norm_squared(),
                                        Observable::witness(ghz_type[m]).hs_norm_squared()});
    }

    // One shadow sized for all witnesses.
    PredictionPlan plan = plan_samples(m_max, summary.max_hs_norm, config.epsilon, config.delta);
    summary.snapshots = plan.num_snapshots;
    summary.num_batches = plan.num_batches;
    uint64_t base = RandomStream::derive(task_base(config.seed, 0, rep), 2)();
    BatchDensityEstimator estimator(StatePreparation::dense(psi), base, plan.num_snapshots, plan.num_batches);

    RandomStream direct_rng = RandomStream::derive(task_base(config.seed, 0, rep), 3);
    DirectMeasurementOptions options{config.min_shots, config.max_shots};
    uint64_t direct_total = 0;
    bool shadow_genuine = false;
    bool shadow_ghz = false;
    bool exact_genuine = false;
    bool exact_ghz = false;
    for (size_t m = 0; m < m_max; m++) {
        Eigen::VectorXcd phi = witness_target(genuine[m]);
        double fidelity_hat = estimator.fidelity(phi);
        double fidelity = std::norm(phi.dot(psi.amplitudes));
        summary.max_estimation_error = std::max(summary.max_estimation_error, std::abs(fidelity_hat - fidelity));

        direct_total += direct_witness_measurement(psi, genuine[m], config.epsilon, direct_rng, options).samples_used;

        auto mark = [&](bool detected, bool &flag, size_t &first) {
            if (detected && !flag) {
                flag = true;
                first = m + 1;
            }
        };
        mark(0.5 - fidelity_hat < 0, shadow_genuine, summary.shadow_first_genuine);
        mark(0.75 - fidelity_hat < 0, shadow_ghz, summary.shadow_first_ghz);
        mark(witness_value(genuine[m], psi) < 0, exact_genuine, summary.exact_first_genuine);
        mark(witness_value(ghz_type[m], psi) < 0, exact_ghz, summary.exact_first_ghz);

        WitnessRow row;
        row.repetition = rep;
        row.num_observables = m + 1;
        row.shadow_cost = plan_samples(m + 1, summary.max_hs_norm, config.epsilon, config.delta).num_snapshots;
        row.direct_cost = direct_total;
        row.shadow_detect_genuine = shadow_genuine;
        row.shadow_detect_ghz = shadow_ghz;
        row.exact_detect_genuine = exact_genuine;
        row.exact_detect_ghz = exact_ghz;
        task.rows.push_back(row);
    }
    return task;
}

}  // namespace

WitnessResult run_witness(const WitnessConfig &config) {
    require(config.max_observables >= 1, "witness needs max_observables >= 1");
    require(config.repetitions >= 1, "witness needs at least one repetition");
    std::vector<WitnessTask> tasks(config.repetitions);
    parallel_for(
        config.repetitions, [&](size_t rep) { tasks[rep] = run_witness_repetition(config, rep); }, config.threads);
    WitnessResult result;
    for (WitnessTask &t : tasks) {
        result.repetitions.push_back(t.summary);
        result.rows.insert(result.rows.end(), t.rows.begin(), t.rows.end());
    }
    return result;
}

void write_witness_csv(std::ostream &out, const WitnessConfig &config, const WitnessResult &result) {
    CsvWriter csv(out, "witness", config.describe(),
                  {"repetition", "M", "shadow_cost", "direct_cost", "shadow_detect_genuine", "shadow_detect_ghz",
                   "exact_detect_genuine", "exact_detect_ghz"});
    for (const WitnessRow &r : result.rows) {
        csv.row({num(r.repetition), num(r.num_observables), num(r.shadow_cost), num(r.direct_cost),
                 r.shadow_detect_genuine ? "1" : "0", r.shadow_detect_ghz ? "1" : "0",
                 r.exact_detect_genuine ? "1" : "0", r.exact_detect_ghz ? "1" : "0"});
    }
}

}  // namespace shadows
