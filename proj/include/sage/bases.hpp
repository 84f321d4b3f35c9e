#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "sage/error.hpp"

namespace sage {

// Alphabet codes: A=0, C=1, G=2, T=3, N=4.
inline constexpr uint8_t base_a = 0;
inline constexpr uint8_t base_c = 1;
inline constexpr uint8_t base_g = 2;
inline constexpr uint8_t base_t = 3;
inline constexpr uint8_t base_n = 4;

inline constexpr std::array<char, 5> code_to_char = {'A', 'C', 'G', 'T', 'N'};

// 255 = invalid character.
constexpr std::array<uint8_t, 256> make_char_table() {
    std::array<uint8_t, 256> t{};
    for (auto& v : t) v = 255;
    t['A'] = t['a'] = base_a;
    t['C'] = t['c'] = base_c;
    t['G'] = t['g'] = base_g;
    t['T'] = t['t'] = base_t;
    t['N'] = t['n'] = base_n;
    return t;
}

inline constexpr std::array<uint8_t, 256> char_to_code = make_char_table();

inline bool valid_base(char c) { return char_to_code[static_cast<uint8_t>(c)] != 255; }

inline uint8_t base_code(char c) { return char_to_code[static_cast<uint8_t>(c)]; }

inline char complement(char c) {
    switch (c) {
        case 'A': return 'T';
        case 'C': return 'G';
        case 'G': return 'C';
        case 'T': return 'A';
        default: return 'N';
    }
}

inline std::string reverse_complement(std::string_view s) {
    std::string out(s.size(), 'N');
    for (size_t i = 0; i < s.size(); ++i) out[i] = complement(s[s.size() - 1 - i]);
    return out;
}

inline std::string to_upper_bases(std::string_view s) {
    std::string out(s.size(), 0);
    for (size_t i = 0; i < s.size(); ++i) {
        uint8_t code = char_to_code[static_cast<uint8_t>(s[i])];
        if (code == 255)
            throw parse_error("illegal base character '" + std::string(1, s[i]) + "'");
        out[i] = code_to_char[code];
    }
    return out;
}

} // namespace sage
