#include "sage/tune.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace sage {

bitlen_histogram histogram(std::span<const uint64_t> values) {
    bitlen_histogram h;
    for (uint64_t v : values) h.add(v);
    return h;
}

bool class_scheme::valid() const {
    if (widths.empty() || widths.size() > 8 || widths.size() != ranks.size()) return false;
    for (size_t i = 1; i < widths.size(); ++i)
        if (widths[i] <= widths[i - 1]) return false;
    std::vector<bool> seen(ranks.size(), false);
    for (uint8_t r : ranks) {
        if (r >= ranks.size() || seen[r]) return false;
        seen[r] = true;
    }
    for (uint8_t w : widths)
        if (w < 1 || w > max_value_bits) return false;
    return true;
}

namespace {

// Ranks classes by descending count; equal counts rank the smaller width first.
std::vector<uint8_t> ranks_for_counts(const std::vector<uint64_t>& class_counts) {
    size_t k = class_counts.size();
    std::vector<size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (class_counts[a] != class_counts[b]) return class_counts[a] > class_counts[b];
        return a < b; // classes are stored width-ascending
    });
    std::vector<uint8_t> ranks(k);
    for (size_t r = 0; r < k; ++r) ranks[order[r]] = static_cast<uint8_t>(r);
    return ranks;
}

} // namespace

// The guide cost of a partition equals min over code-length assignments of
// sum(count_c * len_c) -- the frequency-ranked assignment attains that
// minimum -- so the search runs over (cut position, set of code lengths
// already spent) and stays exact.
class_scheme optimize_classes(const bitlen_histogram& hist, unsigned max_k) {
    if (hist.total() == 0)
        throw format_error("cannot tune a class scheme on an empty histogram");
    if (max_k < 1 || max_k > 8)
        throw format_error("class count bound must be in 1..8");

    // Distinct observed bit lengths; optimal widths are a subset of these.
    std::vector<unsigned> lens;
    std::vector<uint64_t> cnts;
    for (unsigned b = 1; b <= max_value_bits; ++b) {
        if (hist.counts[b]) {
            lens.push_back(b);
            cnts.push_back(hist.counts[b]);
        }
    }
    const size_t d = lens.size();
    const unsigned k_cap = static_cast<unsigned>(std::min<size_t>(max_k, d));

    // prefix[i] = count of values in lens[0..i)
    std::vector<uint64_t> prefix(d + 1, 0);
    for (size_t i = 0; i < d; ++i) prefix[i + 1] = prefix[i] + cnts[i];

    const uint64_t inf = std::numeric_limits<uint64_t>::max();
    const size_t nmask = 1ull << k_cap;
    // best[i][mask]: min cost covering lens[0..i) with code lengths in mask used.
    std::vector<std::vector<uint64_t>> best(d + 1, std::vector<uint64_t>(nmask, inf));
    std::vector<std::vector<std::pair<uint16_t, uint16_t>>> from(
        d + 1, std::vector<std::pair<uint16_t, uint16_t>>(nmask, {0, 0}));
    best[0][0] = 0;

    for (size_t i = 0; i < d; ++i) {
        for (size_t mask = 0; mask < nmask; ++mask) {
            uint64_t cur = best[i][mask];
            if (cur == inf) continue;
            for (size_t j = i + 1; j <= d; ++j) {
                // New class covers lens[i..j) with width lens[j-1].
                uint64_t n = prefix[j] - prefix[i];
                uint64_t payload = n * lens[j - 1];
                for (unsigned code = 0; code < k_cap; ++code) {
                    if (mask & (1ull << code)) continue;
                    uint64_t cost = cur + payload + n * (code + 1);
                    size_t nm = mask | (1ull << code);
                    if (cost < best[j][nm]) {
                        best[j][nm] = cost;
                        from[j][nm] = {static_cast<uint16_t>(i),
                                       static_cast<uint16_t>(code)};
                    }
                }
            }
        }
    }

    uint64_t opt = inf;
    size_t opt_mask = 0;
    for (size_t mask = 1; mask < nmask; ++mask) {
        if (best[d][mask] < opt) {
            opt = best[d][mask];
            opt_mask = mask;
        }
    }

    // Recover the cut points; the rank permutation is re-derived from the
    // spec rule rather than from the DP's internal code assignment.
    std::vector<unsigned> cut_widths;
    {
        size_t i = d;
        size_t mask = opt_mask;
        while (i > 0) {
            auto [pi, code] = from[i][mask];
            cut_widths.push_back(lens[i - 1]);
            mask &= ~(1ull << code);
            i = pi;
        }
        std::reverse(cut_widths.begin(), cut_widths.end());
    }

    class_scheme scheme;
    std::vector<uint64_t> class_counts;
    size_t lo = 0;
    for (unsigned w : cut_widths) {
        uint64_t n = 0;
        while (lo < d && lens[lo] <= w) n += cnts[lo++];
        scheme.widths.push_back(static_cast<uint8_t>(w));
        class_counts.push_back(n);
    }
    scheme.ranks = ranks_for_counts(class_counts);
    return scheme;
}

uint64_t cost_of(const bitlen_histogram& hist, const class_scheme& scheme) {
    unsigned maxb = hist.max_bitlen();
    if (maxb > 0 && scheme.widths.back() < maxb)
        throw format_error("class scheme does not cover " + std::to_string(maxb) +
                           "-bit values");
    uint64_t total = 0;
    for (unsigned b = 1; b <= max_value_bits; ++b) {
        if (!hist.counts[b]) continue;
        total += hist.counts[b] * scheme.cost_bits(b);
    }
    return total;
}

} // namespace sage
