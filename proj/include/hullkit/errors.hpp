#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hullkit {

struct empty_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A generator size cap would push fast-path predicate intermediates past the
// double exponent range.
struct cap_exceeded_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_h_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct too_large_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
    std::size_t line;

    parse_error(const std::string& what, std::size_t line_number)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
};

}  // namespace hullkit
