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

// Command-line driver: acquire shadows, predict observables and run the
// benchmark experiments.
//
//   shadows acquire --state ghz:4 --n-snapshots 1000 --seed 1 --out ghz4.cshd
//   shadows predict --shadow ghz4.cshd --observables obs.json [--k-batches K]
//   shadows experiment ghz-noise --config noise.cfg --out noise.csv
//
// Exit codes: 0 success, 2 validation error, 1 runtime error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>

#include "CLI11.hpp"
#include "shadows/experiments.hpp"
#include "shadows/observable_file.hpp"
#include "shadows/prediction.hpp"
#include "shadows/shadow_io.hpp"
#include "shadows/state_library.hpp"

namespace {

using namespace shadows;

constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Writes to --out when given, stdout otherwise.
class Output {
   public:
    explicit Output(const std::string &path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw std::runtime_error("cannot open '" + path + "' for writing");
            }
        }
    }
    std::ostream &stream() { return file_ ? *file_ : std::cout; }
    void close() {
        if (file_) {
            file_->close();
            if (!*file_) {
                throw std::runtime_error("failed writing output file");
            }
        }
    }

   private:
    std::unique_ptr<std::ofstream> file_;
};

struct AcquireArgs {
    std::string state;
    uint64_t snapshots = 0;
    uint64_t seed = 1;
    std::string out;
    size_t threads = 0;
};

int run_acquire(const AcquireArgs &args) {
    StatePreparation prep = parse_state_spec(args.state);
    if (args.snapshots == 0) {
        throw ValidationError("--n-snapshots must be positive");
    }
    RandomStream rng(args.seed);
    auto start = std::chrono::steady_clock::now();
    ClassicalShadow shadow = acquire_shadow(prep, args.snapshots, rng, args.threads);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    save_shadow(shadow, args.out);
    std::cerr << "acquired " << shadow.size() << " snapshots of " << shadow.num_qubits << " qubits in "
              << format_number(seconds) << " s (" << format_number(seconds * 1e3 / static_cast<double>(shadow.size()))
              << " ms per snapshot)\n";
    return 0;
}

struct PredictArgs {
    std::string shadow;
    std::string observables;
    uint64_t batches = 0;
    double delta = 0.05;
    std::string out;
    size_t threads = 0;
};

int run_predict(const PredictArgs &args) {
    std::vector<NamedObservable> named = load_observables(args.observables);
    ClassicalShadow shadow = load_shadow(args.shadow);
    std::vector<Observable> observables;
    for (const NamedObservable &o : named) {
        if (o.observable.num_qubits() != shadow.num_qubits) {
            throw ValidationError("observable '" + o.id + "' acts on " + std::to_string(o.observable.num_qubits()) +
                                  " qubits but the shadow has " + std::to_string(shadow.num_qubits));
        }
        observables.push_back(o.observable);
    }
    uint64_t k = args.batches;
    if (k == 0) {
        k = std::min<uint64_t>(default_batches(std::max<size_t>(1, named.size()), args.delta), shadow.size());
    }
    if (k == 0 || k > shadow.size()) {
        throw ValidationError("--k-batches must lie in [1, N] with N = " + std::to_string(shadow.size()));
    }
    std::vector<double> estimates = median_of_means_predict(shadow, observables, k, args.threads);
    Output out(args.out);
    CsvWriter csv(out.stream(), "predict",
                  {{"seed", std::to_string(shadow.seed)},
                   {"shadow", args.shadow},
                   {"observables", args.observables},
                   {"n", std::to_string(shadow.num_qubits)},
                   {"n_snapshots", std::to_string(shadow.size())},
                   {"k_batches", std::to_string(k)}},
                  {"id", "kind", "estimate"});
    for (size_t i = 0; i < named.size(); i++) {
        csv.row({named[i].id, named[i].observable.kind_name(), format_number(estimates[i])});
    }
    out.close();
    return 0;
}

struct ExperimentArgs {
    std::string name;
    std::string out;
    GhzScalingConfig scaling;
    GhzNoiseConfig noise;
    ToricConfig toric;
    WitnessConfig witness;
    uint64_t seed = 1;
    size_t threads = 0;
    uint64_t snapshots = 0;
    uint64_t batches = 0;
    size_t repetitions = 0;
    std::vector<size_t> sizes;
};

int run_experiment(ExperimentArgs args) {
    Output out(args.out);
    if (args.name == "ghz-scaling") {
        GhzScalingConfig &c = args.scaling;
        c.seed = args.seed;
        c.threads = args.threads;
        c.num_batches = args.batches;
        if (!args.sizes.empty()) {
            c.sizes = args.sizes;
        }
        if (args.repetitions) {
            c.trials = args.repetitions;
        }
        if (args.snapshots) {
            throw ValidationError("ghz-scaling searches N; use --initial-snapshots / --max-snapshots");
        }
        write_ghz_scaling_csv(out.stream(), c, run_ghz_scaling(c));
    } else if (args.name == "ghz-noise") {
        GhzNoiseConfig &c = args.noise;
        c.seed = args.seed;
        c.threads = args.threads;
        c.num_batches = args.batches;
        if (args.snapshots) {
            c.snapshots = args.snapshots;
        }
        if (args.repetitions) {
            c.repetitions = args.repetitions;
        }
        if (args.sizes.size() == 1) {
            c.num_qubits = args.sizes.front();
        } else if (!args.sizes.empty()) {
            throw ValidationError("ghz-noise takes a single size");
        }
        write_ghz_noise_csv(out.stream(), c, run_ghz_noise(c));
    } else if (args.name == "toric") {
        ToricConfig &c = args.toric;
        c.seed = args.seed;
        c.threads = args.threads;
        c.snapshots = args.snapshots;
        if (args.batches) {
            throw ValidationError("toric takes K from the sample plan");
        }
        if (!args.sizes.empty()) {
            c.sizes = args.sizes;
        }
        if (args.repetitions) {
            c.runs = args.repetitions;
        }
        write_toric_csv(out.stream(), c, run_toric(c));
    } else if (args.name == "witness") {
        WitnessConfig &c = args.witness;
        c.seed = args.seed;
        c.threads = args.threads;
        if (args.repetitions) {
            c.repetitions = args.repetitions;
        }
        if (args.snapshots || args.batches || !args.sizes.empty()) {
            throw ValidationError("witness plans N and K itself and has no sizes");
        }
        write_witness_csv(out.stream(), c, run_witness(c));
    } else {
        throw ValidationError("unknown experiment '" + args.name + "'");
    }
    out.close();
    return 0;
}

/// Applies a flat key=value file as defaults for the options of `sub`, so
/// that flags given on the command line still win. Keys are option names
/// without the leading dashes.
void apply_config_defaults(CLI::App &sub, const std::string &path) {
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigINI().from_file(path);
    } catch (const CLI::FileError &e) {
        throw ValidationError(e.what());
    }
    for (const CLI::ConfigItem &item : items) {
        if (!item.parents.empty()) {
            throw ValidationError("config file must be flat; found section '" + item.parents.front() + "'");
        }
        if (item.name == "config") {
            throw ValidationError("config files cannot include other config files");
        }
        CLI::Option *opt = sub.get_option_no_throw("--" + item.name);
        if (opt == nullptr) {
            throw ValidationError("unknown config key '" + item.name + "'");
        }
        std::string value;
        for (const std::string &part : item.inputs) {
            value += (value.empty() ? "" : ",") + part;
        }
        try {
            opt->default_val(value);
        } catch (const CLI::Error &e) {
            throw ValidationError("bad value for config key '" + item.name + "': " + e.what());
        }
    }
}

std::string find_config_path(int argc, char **argv) {
    std::string path;
    for (int i = 1; i < argc; i++) {
        std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) {
            path = argv[i + 1];
        } else if (arg.rfind("--config=", 0) == 0) {
            path = arg.substr(9);
        }
    }
    return path;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app("Classical shadows: acquisition, prediction and experiments");
    app.require_subcommand(1);
    app.set_version_flag("--version", kShadowsVersion);

    AcquireArgs acquire;
    CLI::App *acquire_cmd = app.add_subcommand("acquire", "Acquire a classical shadow and write it to a file");
    acquire_cmd->add_option("--state", acquire.state, "ghz:<n>, ghz-:<n>, noisy-ghz:<n>:<p>, toric:<L>, rotated-ghz3:<seed>")
        ->required();
    acquire_cmd->add_option("--n-snapshots", acquire.snapshots, "Number of snapshots N")->required();
    acquire_cmd->add_option("--seed", acquire.seed, "Random seed");
    acquire_cmd->add_option("--out", acquire.out, "Output shadow file")->required();
    acquire_cmd->add_option("--threads", acquire.threads, "Worker threads (0 = all cores)");

    PredictArgs predict;
    CLI::App *predict_cmd = app.add_subcommand("predict", "Median-of-means predictions from a shadow file");
    predict_cmd->add_option("--shadow", predict.shadow, "Shadow file")->required();
    predict_cmd->add_option("--observables", predict.observables, "Observable list (JSON)")->required();
    predict_cmd->add_option("--k-batches", predict.batches, "Batch count K (default 2 ceil(ln(2M/delta)))");
    predict_cmd->add_option("--delta", predict.delta, "Failure probability for the default K");
    predict_cmd->add_option("--out", predict.out, "Output CSV (default stdout)");
    predict_cmd->add_option("--threads", predict.threads, "Worker threads (0 = all cores)");

    ExperimentArgs exp;
    std::string config_path;
    CLI::App *exp_cmd = app.add_subcommand("experiment", "Run a benchmark experiment and write CSV");
    exp_cmd->add_option("name", exp.name, "ghz-scaling, ghz-noise, toric or witness")
        ->required()
        ->check(CLI::IsMember({"ghz-scaling", "ghz-noise", "toric", "witness"}));
    exp_cmd->add_option("--config", config_path, "Flat key=value file; keys are the option names below");
    exp_cmd->add_option("--seed", exp.seed, "Random seed");
    exp_cmd->add_option("--out", exp.out, "Output CSV (default stdout)");
    exp_cmd->add_option("--threads", exp.threads, "Worker threads (0 = all cores)");
    exp_cmd->add_option("--n-snapshots", exp.snapshots, "Snapshots per run (ghz-noise, toric)");
    exp_cmd->add_option("--k-batches", exp.batches, "Batch count K (ghz-scaling, ghz-noise)");
    exp_cmd->add_option("--repetitions", exp.repetitions, "Trials / repetitions / runs");
    exp_cmd->add_option("--sizes", exp.sizes, "Qubit counts (ghz-*) or lattice sizes L (toric)")->delimiter(',');
    exp_cmd->add_option("--probabilities", exp.noise.probabilities, "ghz-noise: Z-error probabilities")
        ->delimiter(',');
    exp_cmd->add_option("--threshold", exp.scaling.threshold, "ghz-scaling: fidelity criterion");
    exp_cmd->add_option("--success-fraction", exp.scaling.success_fraction, "ghz-scaling: required success rate");
    exp_cmd->add_option("--initial-snapshots", exp.scaling.initial_snapshots, "ghz-scaling: first N probed");
    exp_cmd->add_option("--max-snapshots", exp.scaling.max_snapshots, "ghz-scaling: give up beyond this N");
    exp_cmd->add_option("--epsilon", exp.toric.epsilon, "toric / witness: target accuracy")
        ->each([&](const std::string &v) { exp.witness.epsilon = std::stod(v); });
    exp_cmd->add_option("--delta", exp.toric.delta, "Failure probability")->each([&](const std::string &v) {
        exp.witness.delta = exp.scaling.delta = exp.noise.delta = std::stod(v);
    });
    exp_cmd->add_option("--parity-samples", exp.toric.parity_samples, "toric: unrotated samples checked per L");
    exp_cmd->add_option("--max-observables", exp.witness.max_observables, "witness: largest M");
    exp_cmd->add_option("--min-shots", exp.witness.min_shots, "witness: minimum direct shots per witness");
    exp_cmd->add_option("--max-shots", exp.witness.max_shots, "witness: maximum direct shots per witness");

    try {
        std::string config = find_config_path(argc, argv);
        if (!config.empty()) {
            apply_config_defaults(*exp_cmd, config);
        }
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitValidation;
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (acquire_cmd->parsed()) {
            return run_acquire(acquire);
        }
        if (predict_cmd->parsed()) {
            return run_predict(predict);
        }
        return run_experiment(exp);
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ShadowIoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ShadowIoErrorCode::Io ? kExitRuntime : kExitValidation;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
