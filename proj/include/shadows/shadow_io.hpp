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
#include <stdexcept>
#include <string>
#include <vector>

#include "shadows/shadow.hpp"

namespace shadows {

/// Binary shadow file layout (all integers little-endian):
///
///   "CSHD" | u32 format_version | u32 n | u64 N | u64 seed | N records
///
/// A record is one LSB-first bit stream holding alpha, beta, gamma, delta
/// (n^2 bits each, row-major: entry (j, i) at bit j*n + i), then r, s and the
/// outcome b (n bits each), zero-padded to a whole byte.

enum class ShadowIoErrorCode { VersionMismatch, Truncated, InvariantViolation, Io };

class ShadowIoError : public std::runtime_error {
   public:
    ShadowIoError(ShadowIoErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {}
    ShadowIoErrorCode code() const { return code_; }

   private:
    ShadowIoErrorCode code_;
};

inline constexpr size_t kShadowHeaderBytes = 28;
/// Readers reject larger headers as corrupt.
inline constexpr uint32_t kMaxShadowQubits = 4096;

/// Bytes used by one record of an n-qubit shadow.
size_t shadow_record_bytes(size_t num_qubits);

struct ShadowHeader {
    uint32_t format_version = kShadowFormatVersion;
    uint32_t num_qubits = 0;
    uint64_t num_snapshots = 0;
    uint64_t seed = 0;
};

/// Streams records to `out` without holding the shadow in memory.
class ShadowWriter {
   public:
    ShadowWriter(std::ostream &out, const ShadowHeader &header);

    void write(const Snapshot &s);
    /// Throws unless exactly header.num_snapshots records were written.
    void finish();

   private:
    std::ostream *out_;
    ShadowHeader header_;
    uint64_t written_ = 0;
    std::vector<uint8_t> buffer_;
};

class ShadowReader {
   public:
    explicit ShadowReader(std::istream &in);

    const ShadowHeader &header() const { return header_; }
    /// Reads the next record; returns false after the last one.
    bool next(Snapshot &s);

   private:
    std::istream *in_;
    ShadowHeader header_;
    uint64_t read_ = 0;
    std::vector<uint8_t> buffer_;
};

void write_shadow(const ClassicalShadow &shadow, std::ostream &out);
ClassicalShadow read_shadow(std::istream &in);

void save_shadow(const ClassicalShadow &shadow, const std::string &path);
ClassicalShadow load_shadow(const std::string &path);

}  // namespace shadows
