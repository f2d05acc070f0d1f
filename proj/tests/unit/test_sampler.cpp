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

#include <algorithm>
#include <map>
#include <set>

#include "shadows/clifford_sampler.hpp"
#include "shadows/dense_oracle.hpp"
#include "shadows/tableau.hpp"
#include "test_support.hpp"

namespace shadows {
namespace {

TEST(CountStabilizerStates, SmallCases) {
    EXPECT_EQ(count_stabilizer_states(1), 6u);
    EXPECT_EQ(count_stabilizer_states(2), 60u);
    EXPECT_EQ(count_stabilizer_states(3), 1080u);
    EXPECT_EQ(count_stabilizer_states(4), 36720u);
    EXPECT_THROW(count_stabilizer_states(0), std::invalid_argument);
    EXPECT_THROW(count_stabilizer_states(12), std::overflow_error);
}

TEST(CountSymplecticGroup, MatchesBruteForce) {
    EXPECT_EQ(count_symplectic_group(1), testing::brute_force_symplectic(1).size());
    EXPECT_EQ(count_symplectic_group(2), testing::brute_force_symplectic(2).size());
    EXPECT_EQ(count_symplectic_group(2), 720u);
}

TEST(SampleClifford, ZeroQubitsThrows) {
    RandomStream rng(1);
    EXPECT_THROW(sample_clifford(0, rng), std::invalid_argument);
}

TEST(SampleClifford, EverySampleIsSymplectic) {
    RandomStream rng(2);
    for (size_t n : {1, 2, 3, 8, 63, 64, 65, 162}) {
        int draws = n <= 8 ? 10000 : 1000;
        for (int i = 0; i < draws; i++) {
            ASSERT_TRUE(sample_clifford(n, rng).is_valid()) << "n = " << n;
        }
    }
}

TEST(SampleClifford, SameSeedSameSequence) {
    RandomStream a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; i++) {
        CliffordElement x = sample_clifford(10, a);
        EXPECT_EQ(x, sample_clifford(10, b));
        differs |= !(x == sample_clifford(10, c));
    }
    EXPECT_TRUE(differs);
}

TEST(SampleClifford, OneQubitGroupIsUniform) {
    std::set<uint64_t> group;
    for (const auto &rows : testing::brute_force_symplectic(1)) {
        for (uint32_t r = 0; r < 2; r++) {
            for (uint32_t s = 0; s < 2; s++) {
                group.insert(testing::clifford_key(testing::element_from_rows(1, rows, r, s)));
            }
        }
    }
    ASSERT_EQ(group.size(), 24u);
    RandomStream rng(3);
    std::map<uint64_t, int> counts;
    int draws = 1'000'000;
    for (int i = 0; i < draws; i++) {
        counts[testing::clifford_key(sample_clifford(1, rng))]++;
    }
    ASSERT_EQ(counts.size(), 24u);
    for (const auto &[key, count] : counts) {
        EXPECT_TRUE(group.count(key));
        EXPECT_NEAR(count / double(draws), 1.0 / 24, 0.003);
    }
}

TEST(SampleClifford, EnumeratedTwoQubitGroupMatchesBruteForce) {
    std::set<uint64_t> brute;
    for (const auto &rows : testing::brute_force_symplectic(2)) {
        for (uint32_t r = 0; r < 4; r++) {
            for (uint32_t s = 0; s < 4; s++) {
                brute.insert(testing::clifford_key(testing::element_from_rows(2, rows, r, s)));
            }
        }
    }
    std::set<uint64_t> enumerated;
    for (const CliffordElement &c : enumerate_cliffords(2)) {
        enumerated.insert(testing::clifford_key(c));
    }
    EXPECT_EQ(brute.size(), 11520u);
    EXPECT_EQ(enumerated, brute);
}

/// Orbit of |0^n> under sampled Cliffords, keyed by the full signed
/// stabilizer group, which determines the state.
std::map<std::vector<std::string>, int> orbit_counts(size_t n, int draws, uint64_t seed) {
    RandomStream rng(seed);
    std::map<std::vector<std::string>, int> counts;
    for (int i = 0; i < draws; i++) {
        StabilizerTableau t = apply_clifford(StabilizerTableau(n), sample_clifford(n, rng));
        std::vector<PauliString> gens = t.stabilizers();
        std::vector<std::string> key;
        for (uint64_t mask = 1; mask < (uint64_t{1} << n); mask++) {
            PauliString p(n);
            for (size_t j = 0; j < n; j++) {
                if ((mask >> j) & 1) {
                    p *= gens[j];
                }
            }
            key.push_back(p.to_string());
        }
        std::sort(key.begin(), key.end());
        counts[key]++;
    }
    return counts;
}

TEST(SampleClifford, OrbitOfZeroIsUniformOnOneQubit) {
    int draws = 1'000'000;
    auto counts = orbit_counts(1, draws, 4);
    ASSERT_EQ(counts.size(), 6u);
    for (const auto &[key, count] : counts) {
        EXPECT_NEAR(count / double(draws), 1.0 / 6, 0.005);
    }
}

TEST(SampleClifford, OrbitOfZeroIsUniformOnTwoQubits) {
    int draws = 10'000'000;
    auto counts = orbit_counts(2, draws, 5);
    ASSERT_EQ(counts.size(), 60u);
    for (const auto &[key, count] : counts) {
        EXPECT_NEAR(count / double(draws), 1.0 / 60, 0.002);
    }
}

}  // namespace
}  // namespace shadows
