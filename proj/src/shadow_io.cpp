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

#include "shadows/shadow_io.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace shadows {

namespace {

constexpr std::array<char, 4> kMagic = {'C', 'S', 'H', 'D'};

template <typename T>
void put_le(std::vector<uint8_t> &out, T value) {
    for (size_t i = 0; i < sizeof(T); i++) {
        out.push_back(static_cast<uint8_t>(value >> (8 * i)));
    }
}

template <typename T>
T get_le(const uint8_t *bytes) {
    T value = 0;
    for (size_t i = 0; i < sizeof(T); i++) {
        value |= static_cast<T>(bytes[i]) << (8 * i);
    }
    return value;
}

/// Appends bit runs LSB-first into a byte buffer.
class BitPacker {
   public:
    explicit BitPacker(std::vector<uint8_t> &out) : out_(&out) {}

    void append(std::span<const uint64_t> words, size_t num_bits) {
        for (size_t w = 0; num_bits > 0; w++) {
            size_t take = std::min<size_t>(64, num_bits);
            uint64_t value = take == 64 ? words[w] : words[w] & ((uint64_t{1} << take) - 1);
            push(value, take);
            num_bits -= take;
        }
    }

    void append_bit(bool bit) { push(bit, 1); }

    void flush() {
        while (filled_ > 0) {
            out_->push_back(static_cast<uint8_t>(acc_));
            acc_ >>= 8;
            filled_ = filled_ > 8 ? filled_ - 8 : 0;
        }
    }

   private:
    void push(uint64_t value, size_t count) {
        // Keeps at most 7 pending bits between calls, so acc_ never overflows
        // when count <= 64 is split into two halves.
        if (count > 32) {
            push(value & 0xFFFFFFFFULL, 32);
            push(value >> 32, count - 32);
            return;
        }
        acc_ |= value << filled_;
        filled_ += count;
        while (filled_ >= 8) {
            out_->push_back(static_cast<uint8_t>(acc_));
            acc_ >>= 8;
            filled_ -= 8;
        }
    }

    std::vector<uint8_t> *out_;
    uint64_t acc_ = 0;
    size_t filled_ = 0;
};

class BitUnpacker {
   public:
    BitUnpacker(const uint8_t *bytes, size_t num_bytes) : bytes_(bytes), num_bytes_(num_bytes) {}

    void extract(std::span<uint64_t> words, size_t num_bits) {
        for (size_t w = 0; w < words.size(); w++) {
            size_t take_bits = std::min<size_t>(64, num_bits - std::min(num_bits, w * 64));
            words[w] = take(take_bits);
        }
    }

    bool next_bit() { return take(1); }

    uint64_t take(size_t count) {
        uint64_t result = 0;
        size_t done = 0;
        while (done < count) {
            size_t offset = pos_ & 7;
            size_t chunk = std::min<size_t>(8 - offset, count - done);
            uint64_t bits = (bytes_[pos_ >> 3] >> offset) & ((1u << chunk) - 1);
            result |= bits << done;
            done += chunk;
            pos_ += chunk;
        }
        return result;
    }

    /// True if every bit after the current position is zero.
    bool rest_is_zero() const {
        for (size_t p = pos_; p < num_bytes_ * 8; p++) {
            if ((bytes_[p >> 3] >> (p & 7)) & 1) {
                return false;
            }
        }
        return true;
    }

   private:
    const uint8_t *bytes_;
    size_t num_bytes_;
    size_t pos_ = 0;
};

}  // namespace

size_t shadow_record_bytes(size_t num_qubits) { return (4 * num_qubits * num_qubits + 3 * num_qubits + 7) / 8; }

ShadowWriter::ShadowWriter(std::ostream &out, const ShadowHeader &header) : out_(&out), header_(header) {
    std::vector<uint8_t> bytes(kMagic.begin(), kMagic.end());
    put_le(bytes, header.format_version);
    put_le(bytes, header.num_qubits);
    put_le(bytes, header.num_snapshots);
    put_le(bytes, header.seed);
    out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw ShadowIoError(ShadowIoErrorCode::Io, "failed to write shadow header");
    }
    buffer_.reserve(shadow_record_bytes(header.num_qubits));
}

void ShadowWriter::write(const Snapshot &s) {
    size_t n = header_.num_qubits;
    if (written_ >= header_.num_snapshots) {
        throw ShadowIoError(ShadowIoErrorCode::InvariantViolation, "more records than the header announces");
    }
    if (s.clifford.num_qubits() != n || s.outcome.size() != n) {
        throw ShadowIoError(ShadowIoErrorCode::InvariantViolation, "snapshot size does not match header");
    }
    buffer_.clear();
    BitPacker packer(buffer_);
    const PauliTable &rows = s.clifford.images();
    // alpha and beta come from the X images, gamma and delta from the Z images.
    for (size_t j = 0; j < n; j++) {
        packer.append(rows.x(j), n);
    }
    for (size_t j = 0; j < n; j++) {
        packer.append(rows.z(j), n);
    }
    for (size_t j = 0; j < n; j++) {
        packer.append(rows.x(n + j), n);
    }
    for (size_t j = 0; j < n; j++) {
        packer.append(rows.z(n + j), n);
    }
    for (size_t j = 0; j < n; j++) {
        packer.append_bit(s.clifford.r(j));
    }
    for (size_t j = 0; j < n; j++) {
        packer.append_bit(s.clifford.s(j));
    }
    packer.append(s.outcome.words(), n);
    packer.flush();
    out_->write(reinterpret_cast<const char *>(buffer_.data()), static_cast<std::streamsize>(buffer_.size()));
    if (!*out_) {
        throw ShadowIoError(ShadowIoErrorCode::Io, "failed to write shadow record");
    }
    written_++;
}

void ShadowWriter::finish() {
    if (written_ != header_.num_snapshots) {
        throw ShadowIoError(ShadowIoErrorCode::InvariantViolation,
                            "wrote " + std::to_string(written_) + " records but the header announces " +
                                std::to_string(header_.num_snapshots));
    }
    out_->flush();
    if (!*out_) {
        throw ShadowIoError(ShadowIoErrorCode::Io, "failed to flush shadow stream");
    }
}

ShadowReader::ShadowReader(std::istream &in) : in_(&in) {
    std::array<uint8_t, kShadowHeaderBytes> bytes{};
    in.read(reinterpret_cast<char *>(bytes.data()), bytes.size());
    size_t got = static_cast<size_t>(in.gcount());
    if (got >= kMagic.size() && !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
        throw ShadowIoError(ShadowIoErrorCode::VersionMismatch, "not a shadow file (bad magic bytes)");
    }
    if (got < bytes.size()) {
        if (in.bad()) {
            throw ShadowIoError(ShadowIoErrorCode::Io, "failed to read shadow header");
        }
        throw ShadowIoError(ShadowIoErrorCode::Truncated, "shadow header is truncated");
    }
    header_.format_version = get_le<uint32_t>(&bytes[4]);
    header_.num_qubits = get_le<uint32_t>(&bytes[8]);
    header_.num_snapshots = get_le<uint64_t>(&bytes[12]);
    header_.seed = get_le<uint64_t>(&bytes[20]);
    if (header_.format_version != kShadowFormatVersion) {
        throw ShadowIoError(ShadowIoErrorCode::VersionMismatch,
                            "unsupported shadow format version " + std::to_string(header_.format_version));
    }
    if (header_.num_qubits > kMaxShadowQubits) {
        throw ShadowIoError(ShadowIoErrorCode::InvariantViolation,
                            "qubit count " + std::to_string(header_.num_qubits) + " exceeds the supported maximum");
    }
    if (header_.num_qubits == 0 && header_.num_snapshots > 0) {
        throw ShadowIoError(ShadowIoErrorCode::InvariantViolation, "records on zero qubits");
    }
    buffer_.resize(shadow_record_bytes(header_.num_qubits));
}

bool ShadowReader::next(Snapshot &s) {
    if (read_ == header_.num_snapshots) {
        if (in_->peek() != std::char_traits<char>::eof()) {
            throw ShadowIoError(ShadowIoErrorCode::InvariantViolation, "trailing bytes after the last record");
        }
        return false;
    }
    in_->read(reinterpret_cast<char *>(buffer_.data()), static_cast<std::streamsize>(buffer_.size()));
    if (static_cast<size_t>(in_->gcount()) != buffer_.size()) {
        if (in_->bad()) {
            throw ShadowIoError(ShadowIoErrorCode::Io, "failed to read shadow record");
        }
        throw ShadowIoError(ShadowIoErrorCode::Truncated,
                            "shadow stream ends inside record " + std::to_string(read_) + " of " +
                                std::to_string(header_.num_snapshots));
    }
    size_t n = header_.num_qubits;
    CliffordElement c(n);
    PauliTable &rows = c.images();
    BitUnpacker unpacker(buffer_.data(), buffer_.size());
    for (size_t j = 0; j < n; j++) {
        unpacker.extract(rows.x(j), n);
    }
    for (size_t j = 0; j < n; j++) {
        unpacker.extract(rows.z(j), n);
    }
    for (size_t j = 0; j < n; j++) {
        unpacker.extract(rows.x(n + j), n);
    }
    for (size_t j = 0; j < n; j++) {
        unpacker.extract(rows.z(n + j), n);
    }
    for (size_t j = 0; j < n; j++) {
        c.set_r(j, unpacker.next_bit());
    }
    for (size_t j = 0; j < n; j++) {
        c.set_s(j, unpacker.next_bit());
    }
    Bitstring b(n);
    unpacker.extract(b.words(), n);
    if (!unpacker.rest_is_zero()) {
        throw ShadowIoError(ShadowIoErrorCode::InvariantViolation,
                            "nonzero padding in record " + std::to_string(read_));
    }
    if (!c.is_valid()) {
        throw ShadowIoError(ShadowIoErrorCode::InvariantViolation,
                            "record " + std::to_string(read_) + " holds a non-symplectic Clifford");
    }
    s.clifford = std::move(c);
    s.outcome = std::move(b);
    read_++;
    return true;
}

void write_shadow(const ClassicalShadow &shadow, std::ostream &out) {
    ShadowHeader header;
    header.format_version = shadow.format_version;
    header.num_qubits = static_cast<uint32_t>(shadow.num_qubits);
    header.num_snapshots = shadow.snapshots.size();
    header.seed = shadow.seed;
    ShadowWriter writer(out, header);
    for (const Snapshot &s : shadow.snapshots) {
        writer.write(s);
    }
    writer.finish();
}

ClassicalShadow read_shadow(std::istream &in) {
    ShadowReader reader(in);
    ClassicalShadow shadow;
    shadow.num_qubits = reader.header().num_qubits;
    shadow.seed = reader.header().seed;
    shadow.format_version = reader.header().format_version;
    shadow.snapshots.reserve(reader.header().num_snapshots);
    Snapshot s;
    while (reader.next(s)) {
        shadow.snapshots.push_back(std::move(s));
    }
    return shadow;
}

void save_shadow(const ClassicalShadow &shadow, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ShadowIoError(ShadowIoErrorCode::Io, "cannot open '" + path + "' for writing");
    }
    write_shadow(shadow, out);
}

ClassicalShadow load_shadow(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ShadowIoError(ShadowIoErrorCode::Io, "cannot open '" + path + "'");
    }
    return read_shadow(in);
}

}  // namespace shadows
