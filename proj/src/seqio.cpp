#include "sage/seqio.hpp"

#include <array>

#include "sage/bitio.hpp"

namespace sage {

namespace {

uint8_t one_hot_nibble(uint8_t code) {
    return code == base_n ? 0 : static_cast<uint8_t>(1u << code);
}

uint8_t one_hot_to_code(uint8_t nib, uint64_t at) {
    switch (nib) {
        case 0: return base_n;
        case 1: return base_a;
        case 2: return base_c;
        case 4: return base_g;
        case 8: return base_t;
        default:
            throw format_error("corrupt one-hot nibble at base " + std::to_string(at));
    }
}

} // namespace

packed_seq pack_bases(std::string_view bases, pack_mode mode) {
    bit_writer w;
    for (size_t i = 0; i < bases.size(); ++i) {
        uint8_t code = base_code(bases[i]);
        if (code == 255)
            throw parse_error("illegal base at position " + std::to_string(i));
        switch (mode) {
            case pack_mode::two_bit:
                if (code == base_n)
                    throw format_error("N cannot be 2-bit packed (base " +
                                       std::to_string(i) + ")");
                w.write(code, 2);
                break;
            case pack_mode::three_bit:
                w.write(code, 3);
                break;
            case pack_mode::one_hot:
                w.write(one_hot_nibble(code), 4);
                break;
        }
    }
    packed_seq p;
    p.mode = mode;
    p.length = bases.size();
    p.bits = w.take();
    return p;
}

std::string unpack_bases(const packed_seq& p) {
    bit_reader r(p.bits.data(), p.bits.size() * 8ull);
    std::string out(p.length, 0);
    for (uint64_t i = 0; i < p.length; ++i) {
        uint8_t code;
        switch (p.mode) {
            case pack_mode::two_bit:
                code = static_cast<uint8_t>(r.read(2));
                break;
            case pack_mode::three_bit:
                code = static_cast<uint8_t>(r.read(3));
                if (code > base_n)
                    throw format_error("corrupt 3-bit base code at base " +
                                       std::to_string(i));
                break;
            default:
                code = one_hot_to_code(static_cast<uint8_t>(r.read(4)), i);
                break;
        }
        out[i] = code_to_char[code];
    }
    return out;
}

namespace {

// getline tolerant of a missing trailing newline; strips \r.
bool get_text_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

} // namespace

std::optional<read_record> fastq_reader::next() {
    std::string header, bases, plus, quality;
    if (!get_text_line(*in_, header)) return std::nullopt;
    if (header.empty() && in_->eof()) return std::nullopt;
    const std::string at = " (record " + std::to_string(index_) + ")";
    if (header.empty() || header[0] != '@')
        throw parse_error("FASTQ header must start with '@'" + at);
    if (!get_text_line(*in_, bases))
        throw parse_error("truncated FASTQ record: missing bases" + at);
    if (!get_text_line(*in_, plus))
        throw parse_error("truncated FASTQ record: missing '+' line" + at);
    if (plus.empty() || plus[0] != '+')
        throw parse_error("FASTQ separator must start with '+'" + at);
    if (!get_text_line(*in_, quality))
        throw parse_error("truncated FASTQ record: missing quality line" + at);
    if (quality.size() != bases.size())
        throw parse_error("quality length differs from base length" + at);
    if (bases.empty())
        throw parse_error("empty sequence" + at);

    read_record rec;
    rec.id = header.substr(1);
    try {
        rec.bases = to_upper_bases(bases);
    } catch (const parse_error& e) {
        throw parse_error(std::string(e.what()) + at);
    }
    if (keep_quality_) rec.quality = std::move(quality);
    ++index_;
    return rec;
}

std::vector<read_record> parse_fastq(std::istream& in, bool keep_quality) {
    fastq_reader reader(in, keep_quality);
    std::vector<read_record> out;
    while (auto rec = reader.next()) out.push_back(std::move(*rec));
    return out;
}

std::pair<std::string, std::string> parse_fasta(std::istream& in, std::ostream* warn) {
    std::string line;
    if (!get_text_line(in, line))
        throw parse_error("empty FASTA file");
    if (line.empty() || line[0] != '>')
        throw parse_error("FASTA file must start with a '>' header line");
    std::string name = line.substr(1);
    // Trim the name at the first whitespace, as FASTA headers carry comments.
    if (auto sp = name.find_first_of(" \t"); sp != std::string::npos) name.resize(sp);
    std::string bases;
    bool more_records = false;
    while (get_text_line(in, line)) {
        if (!line.empty() && line[0] == '>') {
            more_records = true;
            break;
        }
        bases += to_upper_bases(line);
    }
    if (bases.empty())
        throw parse_error("FASTA record '" + name + "' has an empty sequence");
    if (more_records && warn)
        *warn << "warning: multiple FASTA records; using first record '" << name
              << "' only\n";
    return {std::move(name), std::move(bases)};
}

void write_fasta(std::ostream& out, std::string_view name, std::string_view bases,
                 size_t wrap) {
    out << '>' << name << '\n';
    for (size_t i = 0; i < bases.size(); i += wrap) {
        out << bases.substr(i, wrap) << '\n';
    }
}

void write_fastq_record(std::ostream& out, const read_record& rec) {
    out << '@' << rec.id << '\n' << rec.bases << '\n' << "+\n";
    if (rec.quality.size() == rec.bases.size())
        out << rec.quality << '\n';
    else
        out << std::string(rec.bases.size(), 'I') << '\n';
}

void write_seq_line(std::ostream& out, std::string_view bases) {
    out << bases << '\n';
}

void write_packed_record(std::ostream& out, const packed_seq& p) {
    uint8_t mode = static_cast<uint8_t>(p.mode);
    out.put(static_cast<char>(mode));
    uint64_t n = p.length;
    for (int i = 0; i < 8; ++i) out.put(static_cast<char>((n >> (8 * i)) & 0xff));
    out.write(reinterpret_cast<const char*>(p.bits.data()),
              static_cast<std::streamsize>(p.bits.size()));
    if (!out) throw io_error("failed writing packed record");
}

packed_seq read_packed_record(std::istream& in) {
    int mode = in.get();
    if (mode == EOF) throw io_error("unexpected EOF reading packed record");
    if (mode > 2) throw format_error("unknown pack mode byte " + std::to_string(mode));
    packed_seq p;
    p.mode = static_cast<pack_mode>(mode);
    uint64_t n = 0;
    for (int i = 0; i < 8; ++i) {
        int b = in.get();
        if (b == EOF) throw io_error("unexpected EOF reading packed record length");
        n |= static_cast<uint64_t>(b & 0xff) << (8 * i);
    }
    p.length = n;
    size_t nbytes = static_cast<size_t>((n * bits_per_base(p.mode) + 7) / 8);
    p.bits.resize(nbytes);
    in.read(reinterpret_cast<char*>(p.bits.data()), static_cast<std::streamsize>(nbytes));
    if (static_cast<size_t>(in.gcount()) != nbytes)
        throw format_error("truncated packed record payload");
    return p;
}

} // namespace sage
