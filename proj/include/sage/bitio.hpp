#pragma once

#include <cassert>
#include <cstdint>
#include <cstring>
#include <istream>
#include <vector>

#include "sage/error.hpp"

namespace sage {

// All packed streams share one bit order: LSB-first within each byte.

inline constexpr uint64_t mask_bits(unsigned n) {
    return n >= 64 ? ~0ull : (1ull << n) - 1ull;
}

class bit_writer {
public:
    // Appends the low `nbits` of `value`, LSB first.
    void write(uint64_t value, unsigned nbits) {
        assert(nbits <= 64);
        value &= mask_bits(nbits);
        acc_ |= value << fill_;
        if (fill_ + nbits < 64) {
            fill_ += nbits;
        } else {
            unsigned taken = 64 - fill_;
            flush_word();
            acc_ = taken < 64 ? value >> taken : 0;
            fill_ = nbits - taken;
        }
        bits_ += nbits;
    }

    void write_bit(bool b) { write(b ? 1 : 0, 1); }

    // Unary guide code for rank r: r ones then a zero.
    void write_unary(unsigned rank) {
        for (unsigned i = 0; i < rank; ++i) write_bit(true);
        write_bit(false);
    }

    uint64_t bit_size() const { return bits_; }

    // Pads with zeros to a byte boundary and returns the buffer.
    std::vector<uint8_t> take() {
        while (fill_ > 0) flush_word();
        size_t nbytes = (bits_ + 7) / 8;
        bytes_.resize(nbytes);
        std::vector<uint8_t> out = std::move(bytes_);
        bytes_.clear();
        acc_ = 0;
        fill_ = 0;
        bits_ = 0;
        return out;
    }

private:
    void flush_word() {
        size_t off = bytes_.size();
        bytes_.resize(off + 8);
        std::memcpy(bytes_.data() + off, &acc_, 8); // little-endian hosts only
        acc_ = 0;
        if (fill_ >= 64) fill_ -= 64; else fill_ = 0;
    }

    std::vector<uint8_t> bytes_;
    uint64_t acc_ = 0;
    unsigned fill_ = 0; // bits pending in acc_
    uint64_t bits_ = 0;
};

// Counts bits without storing them. Shares the writer interface so the
// encoder's size estimate and its real emission run the same code path.
class bit_counter {
public:
    void write(uint64_t, unsigned nbits) { bits_ += nbits; }
    void write_bit(bool) { bits_ += 1; }
    void write_unary(unsigned rank) { bits_ += rank + 1; }
    uint64_t bit_size() const { return bits_; }

private:
    uint64_t bits_ = 0;
};

// Cursor counters for the streaming-access audit. A conforming decode
// never seeks backwards and never pulls more than 64 bits per step.
struct cursor_audit {
    uint64_t reads = 0;
    uint64_t max_step_bits = 0;
    uint64_t backward_seeks = 0;

    bool streaming_ok() const { return backward_seeks == 0 && max_step_bits <= 64; }
};

class bit_reader {
public:
    bit_reader() = default;
    bit_reader(const uint8_t* data, uint64_t nbits) : data_(data), limit_(nbits) {}
    explicit bit_reader(const std::vector<uint8_t>& bytes)
        : data_(bytes.data()), limit_(bytes.size() * 8ull) {}

    uint64_t read(unsigned nbits) {
        assert(nbits <= 64);
        if (pos_ + nbits > limit_)
            throw format_error("bitstream exhausted at bit " + std::to_string(pos_));
        audit_.reads++;
        if (nbits > audit_.max_step_bits) audit_.max_step_bits = nbits;
        uint64_t out = 0;
        unsigned got = 0;
        while (got < nbits) {
            uint64_t byte_idx = (pos_ + got) / 8;
            unsigned bit_idx = static_cast<unsigned>((pos_ + got) % 8);
            unsigned take = 8 - bit_idx;
            if (take > nbits - got) take = nbits - got;
            uint64_t chunk = (data_[byte_idx] >> bit_idx) & mask_bits(take);
            out |= chunk << got;
            got += take;
        }
        pos_ += nbits;
        return out;
    }

    bool read_bit() { return read(1) != 0; }

    // Counts leading ones up to a cap; consumes the terminating zero.
    unsigned read_unary(unsigned max_rank) {
        unsigned r = 0;
        while (read_bit()) {
            if (++r > max_rank)
                throw format_error("guide code overruns class table at bit " +
                                   std::to_string(pos_));
        }
        return r;
    }

    // Only tests use this; a real decode never moves backwards.
    void seek_bit(uint64_t pos) {
        if (pos < pos_) audit_.backward_seeks++;
        pos_ = pos;
    }

    uint64_t bit_pos() const { return pos_; }
    uint64_t bit_limit() const { return limit_; }
    bool exhausted() const { return pos_ >= limit_; }
    const cursor_audit& audit() const { return audit_; }

private:
    const uint8_t* data_ = nullptr;
    uint64_t limit_ = 0;
    uint64_t pos_ = 0;
    cursor_audit audit_;
};

// File-backed reader over a byte window [offset, offset+length), refilled
// through a fixed-size buffer so decode memory stays flat in the stream size.
class buffered_bit_reader {
public:
    static constexpr size_t buffer_bytes = 64 * 1024;

    buffered_bit_reader() = default;

    buffered_bit_reader(std::istream& in, uint64_t byte_offset, uint64_t byte_length)
        : in_(&in), base_(byte_offset), len_(byte_length) {
        buf_.reserve(buffer_bytes);
    }

    uint64_t read(unsigned nbits) {
        assert(nbits <= 64);
        if (pos_ + nbits > len_ * 8)
            throw format_error("bitstream exhausted at bit " + std::to_string(pos_));
        audit_.reads++;
        if (nbits > audit_.max_step_bits) audit_.max_step_bits = nbits;
        uint64_t out = 0;
        unsigned got = 0;
        while (got < nbits) {
            uint64_t byte_idx = (pos_ + got) / 8;
            ensure(byte_idx);
            unsigned bit_idx = static_cast<unsigned>((pos_ + got) % 8);
            unsigned take = 8 - bit_idx;
            if (take > nbits - got) take = nbits - got;
            uint64_t chunk = (buf_[byte_idx - buf_start_] >> bit_idx) & mask_bits(take);
            out |= chunk << got;
            got += take;
        }
        pos_ += nbits;
        return out;
    }

    bool read_bit() { return read(1) != 0; }

    unsigned read_unary(unsigned max_rank) {
        unsigned r = 0;
        while (read_bit()) {
            if (++r > max_rank)
                throw format_error("guide code overruns class table at bit " +
                                   std::to_string(pos_));
        }
        return r;
    }

    uint64_t bit_pos() const { return pos_; }
    uint64_t bit_limit() const { return len_ * 8; }
    bool exhausted() const { return pos_ >= len_ * 8; }
    const cursor_audit& audit() const { return audit_; }
    size_t state_bytes() const { return buf_.capacity(); }

private:
    void ensure(uint64_t byte_idx) {
        if (byte_idx >= buf_start_ && byte_idx < buf_start_ + buf_.size()) return;
        if (byte_idx < buf_start_) audit_.backward_seeks++;
        buf_start_ = byte_idx;
        size_t want = static_cast<size_t>(std::min<uint64_t>(buffer_bytes, len_ - byte_idx));
        buf_.resize(want);
        in_->clear();
        in_->seekg(static_cast<std::streamoff>(base_ + byte_idx));
        in_->read(reinterpret_cast<char*>(buf_.data()), static_cast<std::streamsize>(want));
        if (static_cast<size_t>(in_->gcount()) != want)
            throw io_error("short read while refilling stream buffer");
    }

    std::istream* in_ = nullptr;
    uint64_t base_ = 0;
    uint64_t len_ = 0;
    uint64_t pos_ = 0;
    std::vector<uint8_t> buf_;
    uint64_t buf_start_ = 0;
    cursor_audit audit_;
};

} // namespace sage
