#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "sage/error.hpp"

namespace sage {

inline constexpr unsigned max_value_bits = 40;

// Minimal binary width of v; zero takes one bit.
inline unsigned bit_length(uint64_t v) {
    if (v == 0) return 1;
    return 64 - static_cast<unsigned>(__builtin_clzll(v));
}

// counts[b] = number of values whose minimal width is b, for b in 1..40.
struct bitlen_histogram {
    std::array<uint64_t, max_value_bits + 1> counts{}; // index 0 unused

    void add(uint64_t value) {
        unsigned b = bit_length(value);
        if (b > max_value_bits)
            throw format_error("value exceeds " + std::to_string(max_value_bits) +
                               "-bit tuning range");
        counts[b]++;
    }

    uint64_t total() const {
        uint64_t t = 0;
        for (unsigned b = 1; b <= max_value_bits; ++b) t += counts[b];
        return t;
    }

    unsigned max_bitlen() const {
        for (unsigned b = max_value_bits; b >= 1; --b)
            if (counts[b]) return b;
        return 0;
    }
};

bitlen_histogram histogram(std::span<const uint64_t> values);

// Tuned bit-width classes with prefix-free unary guide codes. Class ranks
// order the codes: rank 0 -> "0", rank 1 -> "10", rank 2 -> "110", ...
struct class_scheme {
    std::vector<uint8_t> widths; // strictly increasing
    std::vector<uint8_t> ranks;  // ranks[i] = code rank of class i; a permutation

    size_t class_count() const { return widths.size(); }

    // Smallest class whose width covers `bits`; throws on coverage violation.
    unsigned class_for_bitlen(unsigned bits) const {
        for (size_t i = 0; i < widths.size(); ++i)
            if (widths[i] >= bits) return static_cast<unsigned>(i);
        throw format_error("value of " + std::to_string(bits) +
                           " bits not covered by class scheme");
    }

    // Guide-code length for class i (rank + terminating zero).
    unsigned code_bits(unsigned cls) const { return ranks[cls] + 1; }

    // Total encoded bits for one value of the given bit length.
    unsigned cost_bits(unsigned bitlen) const {
        unsigned cls = class_for_bitlen(bitlen);
        return code_bits(cls) + widths[cls];
    }

    // class index by code rank, for decoding.
    std::vector<uint8_t> rank_to_class() const {
        std::vector<uint8_t> inv(ranks.size());
        for (size_t i = 0; i < ranks.size(); ++i) inv[ranks[i]] = static_cast<uint8_t>(i);
        return inv;
    }

    bool valid() const;

    // Single one-bit-wide class; placeholder when a stream saw no values.
    static class_scheme trivial() { return class_scheme{{1}, {0}}; }
};

// Exact minimum-cost scheme over at most max_k classes. Cost of a scheme is
// sum over values of (guide code bits + class width), with codes assigned by
// descending class frequency (ties: smaller width first).
class_scheme optimize_classes(const bitlen_histogram& hist, unsigned max_k);

uint64_t cost_of(const bitlen_histogram& hist, const class_scheme& scheme);

} // namespace sage
