#pragma once

#include <stdexcept>
#include <string>

namespace sage {

// Error classes map 1:1 to CLI exit codes.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct align_error : std::runtime_error {
    explicit align_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed, corrupt or mismatched container data.
struct format_error : std::runtime_error {
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class exit_code : int {
    ok = 0,
    usage = 1,
    parse = 2,
    align = 3,
    format = 4,
    io = 5,
};

} // namespace sage
