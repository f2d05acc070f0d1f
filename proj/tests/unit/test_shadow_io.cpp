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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "shadows/shadow_io.hpp"
#include "shadows/state_library.hpp"

namespace shadows {
namespace {

ClassicalShadow make_shadow(size_t n, size_t count, uint64_t seed) {
    RandomStream rng(seed);
    return acquire_shadow(StatePreparation::pure(ghz_tableau(n)), count, rng);
}

std::string serialize(const ClassicalShadow &shadow) {
    std::ostringstream out;
    write_shadow(shadow, out);
    return out.str();
}

ShadowIoErrorCode read_error(const std::string &bytes) {
    std::istringstream in(bytes);
    try {
        read_shadow(in);
    } catch (const ShadowIoError &e) {
        return e.code();
    }
    ADD_FAILURE() << "read succeeded";
    return ShadowIoErrorCode::Io;
}

TEST(ShadowIo, RecordSizeFormula) {
    EXPECT_EQ(shadow_record_bytes(1), 1u);
    EXPECT_EQ(shadow_record_bytes(2), 3u);
    EXPECT_EQ(shadow_record_bytes(162), (4 * 162 * 162 + 3 * 162 + 7) / 8);
}

TEST(ShadowIo, RoundTripsAcrossWordBoundaries) {
    for (size_t n : {1, 2, 3, 7, 63, 64, 65, 130}) {
        ClassicalShadow shadow = make_shadow(n, 25, n);
        std::string bytes = serialize(shadow);
        EXPECT_EQ(bytes.size(), kShadowHeaderBytes + 25 * shadow_record_bytes(n));
        std::istringstream in(bytes);
        ClassicalShadow back = read_shadow(in);
        EXPECT_EQ(back, shadow) << "n = " << n;
        EXPECT_EQ(serialize(back), bytes);
    }
}

TEST(ShadowIo, EmptyShadowRoundTrips) {
    ClassicalShadow empty;
    empty.num_qubits = 5;
    empty.seed = 77;
    std::string bytes = serialize(empty);
    EXPECT_EQ(bytes.size(), kShadowHeaderBytes);
    std::istringstream in(bytes);
    EXPECT_EQ(read_shadow(in), empty);
}

TEST(ShadowIo, HeaderLayoutIsLittleEndian) {
    ClassicalShadow shadow = make_shadow(3, 2, 0x0102030405060708ULL);
    std::string bytes = serialize(shadow);
    EXPECT_EQ(bytes.substr(0, 4), "CSHD");
    EXPECT_EQ(uint8_t(bytes[4]), 1);
    EXPECT_EQ(uint8_t(bytes[8]), 3);
    EXPECT_EQ(uint8_t(bytes[12]), 2);
    EXPECT_EQ(uint8_t(bytes[20]), 0x08);
    EXPECT_EQ(uint8_t(bytes[27]), 0x01);
}

TEST(ShadowIo, LargeShadowFileSizeMatchesFormat) {
    size_t n = 162, count = 200;
    std::string bytes = serialize(make_shadow(n, count, 3));
    double expected = double(count) * (4.0 * n * n + 3.0 * n) / 8 + kShadowHeaderBytes;
    EXPECT_LT(std::abs(double(bytes.size()) - expected) / expected, 0.05);
}

TEST(ShadowIo, CorruptMagicIsVersionMismatch) {
    std::string bytes = serialize(make_shadow(4, 3, 4));
    bytes[0] = 'X';
    EXPECT_EQ(read_error(bytes), ShadowIoErrorCode::VersionMismatch);
}

TEST(ShadowIo, UnknownVersionIsVersionMismatch) {
    std::string bytes = serialize(make_shadow(4, 3, 5));
    bytes[4] = 2;
    EXPECT_EQ(read_error(bytes), ShadowIoErrorCode::VersionMismatch);
}

TEST(ShadowIo, TruncationIsDetected) {
    std::string bytes = serialize(make_shadow(4, 3, 6));
    EXPECT_EQ(read_error(bytes.substr(0, 10)), ShadowIoErrorCode::Truncated);
    EXPECT_EQ(read_error(bytes.substr(0, bytes.size() - 1)), ShadowIoErrorCode::Truncated);
    EXPECT_EQ(read_error(bytes.substr(0, kShadowHeaderBytes)), ShadowIoErrorCode::Truncated);
}

TEST(ShadowIo, InvariantViolationsAreDetected) {
    std::string bytes = serialize(make_shadow(1, 3, 7));
    // n = 1: seven payload bits, so the top bit of each record byte is padding.
    std::string padded = bytes;
    padded[kShadowHeaderBytes] = char(uint8_t(padded[kShadowHeaderBytes]) | 0x80);
    EXPECT_EQ(read_error(padded), ShadowIoErrorCode::InvariantViolation);
    // Clearing alpha, beta, gamma and delta leaves a singular matrix.
    std::string singular = bytes;
    singular[kShadowHeaderBytes] = char(uint8_t(singular[kShadowHeaderBytes]) & 0xF0);
    EXPECT_EQ(read_error(singular), ShadowIoErrorCode::InvariantViolation);
    EXPECT_EQ(read_error(bytes + "x"), ShadowIoErrorCode::InvariantViolation);
    std::string huge = bytes;
    huge[9] = 0x40;
    EXPECT_EQ(read_error(huge), ShadowIoErrorCode::InvariantViolation);
}

TEST(ShadowIo, StreamingWriterAndReader) {
    ClassicalShadow shadow = make_shadow(20, 40, 8);
    std::ostringstream out;
    ShadowWriter writer(out, {kShadowFormatVersion, 20, 40, shadow.seed});
    for (const Snapshot &s : shadow.snapshots) {
        writer.write(s);
    }
    writer.finish();
    EXPECT_EQ(out.str(), serialize(shadow));
    std::istringstream in(out.str());
    ShadowReader reader(in);
    EXPECT_EQ(reader.header().num_snapshots, 40u);
    Snapshot s;
    size_t i = 0;
    while (reader.next(s)) {
        EXPECT_EQ(s, shadow.snapshots[i++]);
    }
    EXPECT_EQ(i, 40u);
}

TEST(ShadowIo, WriterEnforcesAnnouncedCount) {
    ClassicalShadow shadow = make_shadow(3, 2, 9);
    std::ostringstream out;
    ShadowWriter writer(out, {kShadowFormatVersion, 3, 3, 0});
    writer.write(shadow.snapshots[0]);
    EXPECT_THROW(writer.finish(), ShadowIoError);
    std::ostringstream out2;
    ShadowWriter short_writer(out2, {kShadowFormatVersion, 3, 1, 0});
    short_writer.write(shadow.snapshots[0]);
    EXPECT_THROW(short_writer.write(shadow.snapshots[1]), ShadowIoError);
    EXPECT_THROW(short_writer.write(make_shadow(4, 1, 1).snapshots[0]), ShadowIoError);
}

TEST(ShadowIo, FilesRoundTripAndMissingFilesAreIoErrors) {
    ClassicalShadow shadow = make_shadow(9, 30, 10);
    std::filesystem::path path = std::filesystem::temp_directory_path() / "shadows_io_test.cshd";
    save_shadow(shadow, path.string());
    EXPECT_EQ(load_shadow(path.string()), shadow);
    std::filesystem::remove(path);
    try {
        load_shadow(path.string());
        ADD_FAILURE() << "expected an error";
    } catch (const ShadowIoError &e) {
        EXPECT_EQ(e.code(), ShadowIoErrorCode::Io);
    }
}

}  // namespace
}  // namespace shadows
