#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sage/bases.hpp"

namespace sage {

struct read_record {
    std::string id;
    std::string bases;   // uppercase, {A,C,G,T,N}
    std::string quality; // retained only in passthrough mode, else empty

    size_t length() const { return bases.size(); }
};

enum class pack_mode : uint8_t {
    two_bit = 0,  // A=00 C=01 G=10 T=11
    three_bit = 1, // A=000 .. N=100
    one_hot = 2,  // 4 bits/base, bit i set for code i; N = 0000
};

inline unsigned bits_per_base(pack_mode m) {
    switch (m) {
        case pack_mode::two_bit: return 2;
        case pack_mode::three_bit: return 3;
        default: return 4;
    }
}

struct packed_seq {
    pack_mode mode = pack_mode::two_bit;
    uint64_t length = 0; // base count
    std::vector<uint8_t> bits;

    uint64_t bit_size() const { return length * bits_per_base(mode); }
};

packed_seq pack_bases(std::string_view bases, pack_mode mode);
std::string unpack_bases(const packed_seq& p);

// Streaming 4-line-per-record FASTQ parser.
class fastq_reader {
public:
    explicit fastq_reader(std::istream& in, bool keep_quality = false)
        : in_(&in), keep_quality_(keep_quality) {}

    // Returns nullopt at clean EOF; throws parse_error with the record index
    // on malformed input.
    std::optional<read_record> next();

    uint64_t records_read() const { return index_; }

private:
    std::istream* in_;
    bool keep_quality_;
    uint64_t index_ = 0;
};

std::vector<read_record> parse_fastq(std::istream& in, bool keep_quality = false);

// First record of a FASTA file; extra records are ignored with a warning
// on the given stream.
std::pair<std::string, std::string> parse_fasta(std::istream& in,
                                                std::ostream* warn = nullptr);

void write_fasta(std::ostream& out, std::string_view name, std::string_view bases,
                 size_t wrap = 70);
void write_fastq_record(std::ostream& out, const read_record& rec);
void write_seq_line(std::ostream& out, std::string_view bases);

// Packed binary record: mode byte, u64 little-endian base count, packed bits.
void write_packed_record(std::ostream& out, const packed_seq& p);
packed_seq read_packed_record(std::istream& in);

} // namespace sage
