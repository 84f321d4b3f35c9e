#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sage/bases.hpp"

namespace sage {

enum class mm_kind : uint8_t { sub = 0, ins = 1, del = 2 };

// One mismatch against the consensus, in oriented-slice coordinates
// (reverse-complement space when the segment is reverse-strand).
struct mismatch {
    uint32_t offset = 0;
    mm_kind kind = mm_kind::sub;
    uint32_t block_len = 1;  // run length for ins/del, always 1 for sub
    std::string payload;     // sub: 1 base; ins: block_len bases; del: empty
};

// A contiguous read span matched to one consensus location.
struct segment {
    uint64_t cons_pos = 0;   // forward-consensus slice start
    uint64_t slice_len = 0;  // consensus bases covered
    bool rev = false;
    uint32_t read_begin = 0; // half-open interval of the read this covers
    uint32_t read_end = 0;
    std::vector<mismatch> mismatches; // application order, offsets nondecreasing

    // Position the decoder walks from: slice start forward, slice end reversed.
    uint64_t anchor_pos() const { return rev ? cons_pos + slice_len - 1 : cons_pos; }
    uint32_t span() const { return read_end - read_begin; }
};

struct alignment {
    enum class status : uint8_t { mapped, literal };

    status st = status::literal;
    std::vector<segment> segments; // ordered by read_begin
    std::string clip_head;         // literal reads carry the whole read here
    std::string clip_tail;

    bool is_literal() const { return st == status::literal; }
    bool is_chimeric() const { return segments.size() > 1; }
    uint64_t primary_anchor() const { return segments.front().anchor_pos(); }
    uint32_t total_mismatch_entries() const {
        uint32_t n = 0;
        for (const auto& s : segments) n += static_cast<uint32_t>(s.mismatches.size());
        return n;
    }
};

struct align_params {
    unsigned k = 15;
    double max_edit_rate = 0.10;
    uint32_t band = 0;        // per-segment edit cap; 0 = auto from read length
    unsigned max_segments = 1;
    unsigned min_seed_hits = 2;
    unsigned seed_stride = 0; // 0 = auto
    bool long_read = false;
    // Encoder-supplied bit-cost estimate used for the chimeric decision;
    // falls back to mismatch counting when absent.
    std::function<uint64_t(const alignment&, uint32_t read_len)> cost_estimate;

    uint32_t edit_cap(uint32_t read_len) const {
        if (band) return band;
        uint32_t auto_cap = static_cast<uint32_t>(0.30 * read_len) + 8;
        return auto_cap < 32 ? 32 : auto_cap;
    }

    uint32_t chimeric_threshold(uint32_t read_len) const {
        uint32_t five_pct = static_cast<uint32_t>(0.05 * read_len);
        return five_pct > 8 ? five_pct : 8;
    }

    static align_params short_reads() {
        align_params p;
        p.k = 15;
        p.max_edit_rate = 0.10;
        p.max_segments = 1;
        return p;
    }

    static align_params long_reads() {
        align_params p;
        p.k = 17;
        p.max_edit_rate = 0.25;
        p.max_segments = 2;
        p.long_read = true;
        return p;
    }
};

// k-mer hash index over the consensus. Immutable after construction and
// safe to share across threads.
class consensus_index {
public:
    consensus_index(std::string consensus, unsigned k);

    std::string_view bases() const { return consensus_; }
    unsigned k() const { return k_; }

    // Sorted consensus positions of this k-mer key; empty when absent.
    const std::vector<uint32_t>* lookup(uint64_t key) const {
        auto it = table_.find(key);
        return it == table_.end() ? nullptr : &it->second;
    }

private:
    std::string consensus_;
    unsigned k_;
    std::unordered_map<uint64_t, std::vector<uint32_t>> table_;
};

consensus_index build_index(std::string consensus, unsigned k);

alignment align_read(std::string_view read, const consensus_index& index,
                     const align_params& params);

// Rebuilds the read a mapped (or literal) alignment describes. This is the
// reference the decoder output is checked against.
std::string reconstruct(const alignment& aln, std::string_view consensus);

// Applies a segment's mismatch list to its oriented consensus slice.
std::string apply_mismatches(std::string_view oriented_slice,
                             const std::vector<mismatch>& mismatches);

} // namespace sage
