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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "shadows/prediction.hpp"
#include "shadows/shadow_io.hpp"

namespace shadows {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("shadows_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    int run(const std::string &args) const {
        std::string command = std::string(SHADOWS_CLI) + " " + args + " >" + path("stdout.txt") + " 2>" +
                              path("stderr.txt");
        int status = std::system(command.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string read(const std::string &name) const {
        std::ifstream in(path(name), std::ios::binary);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    void write(const std::string &name, const std::string &text) const { std::ofstream(path(name)) << text; }

    /// Parses the estimate column of a predict CSV, keyed by row order.
    std::vector<double> estimates(const std::string &name) const {
        std::istringstream in(read(name));
        std::string line;
        std::vector<double> values;
        std::getline(in, line);
        std::getline(in, line);
        while (std::getline(in, line)) {
            values.push_back(std::stod(line.substr(line.rfind(',') + 1)));
        }
        return values;
    }

    fs::path dir_;
};

TEST_F(CliTest, AcquireWritesRequestedShadow) {
    ASSERT_EQ(run("acquire --state ghz:4 --n-snapshots 1000 --seed 3 --out " + path("a.cshd")), 0) << read("stderr.txt");
    ClassicalShadow shadow = load_shadow(path("a.cshd"));
    EXPECT_EQ(shadow.size(), 1000u);
    EXPECT_EQ(shadow.num_qubits, 4u);
    EXPECT_EQ(shadow.seed, 3u);
    EXPECT_NE(read("stderr.txt").find("ms per snapshot"), std::string::npos);
}

TEST_F(CliTest, AcquireIsDeterministic) {
    ASSERT_EQ(run("acquire --state noisy-ghz:6:0.2 --n-snapshots 300 --seed 9 --out " + path("a.cshd")), 0);
    ASSERT_EQ(run("acquire --state noisy-ghz:6:0.2 --n-snapshots 300 --seed 9 --threads 1 --out " + path("b.cshd")),
              0);
    ASSERT_EQ(run("acquire --state noisy-ghz:6:0.2 --n-snapshots 300 --seed 10 --out " + path("c.cshd")), 0);
    EXPECT_EQ(read("a.cshd"), read("b.cshd"));
    EXPECT_NE(read("a.cshd"), read("c.cshd"));
}

TEST_F(CliTest, AcquireLargestToricCode) {
    ASSERT_EQ(run("acquire --state toric:9 --n-snapshots 100 --out " + path("t.cshd")), 0) << read("stderr.txt");
    ClassicalShadow shadow = load_shadow(path("t.cshd"));
    EXPECT_EQ(shadow.num_qubits, 162u);
    EXPECT_EQ(shadow.size(), 100u);
}

TEST_F(CliTest, PredictGhzFidelities) {
    uint64_t n = plan_samples(1, 1, 0.1, 0.05).num_snapshots;
    ASSERT_EQ(run("acquire --state ghz:4 --seed 4 --n-snapshots " + std::to_string(n) + " --out " + path("g.cshd")), 0);
    write("obs.json", R"({"observables": [{"id": "plus", "kind": "fidelity", "state": "ghz:4"},
                                          {"id": "minus", "kind": "fidelity", "state": "ghz-:4"}]})");
    ASSERT_EQ(run("predict --shadow " + path("g.cshd") + " --observables " + path("obs.json") + " --out " +
                  path("p.csv")),
              0)
        << read("stderr.txt");
    std::string csv = read("p.csv");
    EXPECT_EQ(csv.rfind("# shadows 1.0.0 experiment=predict seed=4 ", 0), 0u);
    EXPECT_NE(csv.find("\nid,kind,estimate\nplus,fidelity,"), std::string::npos);
    EXPECT_NE(csv.find("k_batches=10"), std::string::npos);
    std::vector<double> est = estimates("p.csv");
    ASSERT_EQ(est.size(), 2u);
    EXPECT_NEAR(est[0], 1.0, 0.1);
    EXPECT_NEAR(est[1], 0.0, 0.1);
    ASSERT_EQ(run("predict --shadow " + path("g.cshd") + " --observables " + path("obs.json") + " --k-batches 10 --out " +
                  path("q.csv")),
              0);
    EXPECT_EQ(read("p.csv"), read("q.csv"));
}

TEST_F(CliTest, ValidationErrorsExitWithTwo) {
    ASSERT_EQ(run("acquire --state ghz:3 --n-snapshots 20 --out " + path("s.cshd")), 0);
    write("obs4.json", R"({"observables": [{"kind": "fidelity", "state": "ghz:4"}]})");
    write("obs3.json", R"({"observables": [{"kind": "fidelity", "state": "ghz:3"}]})");
    write("bad.json", "{");
    std::string shadow = " --shadow " + path("s.cshd");
    EXPECT_EQ(run("acquire --state plasma:3 --n-snapshots 10 --out " + path("x.cshd")), 2);
    EXPECT_EQ(run("acquire --state ghz:3 --n-snapshots 0 --out " + path("x.cshd")), 2);
    EXPECT_EQ(run("acquire --state ghz:3 --n-snapshots 10"), 2);
    EXPECT_EQ(run("acquire --state ghz:3 --n-snapshots ten --out " + path("x.cshd")), 2);
    EXPECT_EQ(run("predict" + shadow + " --observables " + path("obs4.json")), 2);
    EXPECT_EQ(run("predict" + shadow + " --observables " + path("bad.json")), 2);
    EXPECT_EQ(run("predict" + shadow + " --observables " + path("obs3.json") + " --k-batches 21"), 2);
    EXPECT_EQ(run("predict" + shadow + " --observables " + path("obs3.json") + " --k-batches 20"), 0);
    EXPECT_EQ(run("experiment frobnicate"), 2);
    EXPECT_EQ(run("experiment toric --k-batches 3"), 2);
    EXPECT_EQ(run("bogus"), 2);
    EXPECT_EQ(run(""), 2);
    std::string corrupt = read("s.cshd");
    corrupt[0] = 'Z';
    std::ofstream(path("corrupt.cshd"), std::ios::binary) << corrupt;
    EXPECT_EQ(run("predict --shadow " + path("corrupt.cshd") + " --observables " + path("obs3.json")), 2);
    EXPECT_NE(read("stderr.txt").find("magic"), std::string::npos);
}

TEST_F(CliTest, RuntimeErrorsExitWithOne) {
    write("obs3.json", R"({"observables": [{"kind": "fidelity", "state": "ghz:3"}]})");
    EXPECT_EQ(run("predict --shadow " + path("missing.cshd") + " --observables " + path("obs3.json")), 1);
    EXPECT_EQ(run("acquire --state ghz:3 --n-snapshots 5 --out " + path("no/such/dir/x.cshd")), 1);
}

TEST_F(CliTest, ExperimentConfigFileAndOverrides) {
    write("noise.cfg", "# ghz-noise smoke\nsizes = 5\nprobabilities = 0,0.5\nn-snapshots = 400\nrepetitions = 3\n"
                       "seed = 21\n");
    ASSERT_EQ(run("experiment ghz-noise --config " + path("noise.cfg") + " --out " + path("a.csv")), 0)
        << read("stderr.txt");
    std::string a = read("a.csv");
    EXPECT_EQ(a.rfind("# shadows 1.0.0 experiment=ghz-noise seed=21 n=5 probabilities=0,0.5 n_snapshots=400 "
                      "repetitions=3",
                      0),
              0u)
        << a;
    EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 2 + 6);
    ASSERT_EQ(run("experiment ghz-noise --config " + path("noise.cfg") + " --out " + path("b.csv")), 0);
    EXPECT_EQ(read("b.csv"), a);
    ASSERT_EQ(run("experiment ghz-noise --config " + path("noise.cfg") + " --repetitions 1 --seed 22 --out " +
                  path("c.csv")),
              0);
    std::string c = read("c.csv");
    EXPECT_NE(c.find("seed=22"), std::string::npos);
    EXPECT_NE(c.find("repetitions=1"), std::string::npos);
    EXPECT_EQ(std::count(c.begin(), c.end(), '\n'), 2 + 2);
    write("unknown.cfg", "colour = blue\n");
    EXPECT_EQ(run("experiment ghz-noise --config " + path("unknown.cfg")), 2);
    EXPECT_EQ(run("experiment ghz-noise --config " + path("absent.cfg")), 2);
    write("badvalue.cfg", "repetitions = many\n");
    EXPECT_EQ(run("experiment ghz-noise --config " + path("badvalue.cfg")), 2);
}

TEST_F(CliTest, ToricAndScalingExperimentsRunSmall) {
    ASSERT_EQ(run("experiment toric --sizes 2,3 --repetitions 1 --n-snapshots 200 --parity-samples 20 --out " +
                  path("t.csv")),
              0)
        << read("stderr.txt");
    std::string t = read("t.csv");
    EXPECT_NE(t.find("\nL,n,snapshots,k_batches,"), std::string::npos) << t;
    ASSERT_EQ(run("experiment ghz-scaling --sizes 4 --repetitions 2 --threshold 0.8 --initial-snapshots 64 "
                  "--out " +
                  path("s.csv")),
              0)
        << read("stderr.txt");
    EXPECT_NE(read("s.csv").find("experiment=ghz-scaling"), std::string::npos);
    ASSERT_EQ(run("experiment witness --max-observables 4 --repetitions 1 --epsilon 0.3 --out " + path("w.csv")), 0)
        << read("stderr.txt");
    std::string w = read("w.csv");
    EXPECT_EQ(std::count(w.begin(), w.end(), '\n'), 2 + 4);
}

}  // namespace
}  // namespace shadows
