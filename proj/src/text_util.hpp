#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow::detail {

// Whitespace-split tokens of a data line; empty for blank and '#' lines.
inline std::vector<std::string_view> split_data_line(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
        return tokens;
    }
    std::size_t pos = first;
    while (pos < line.size()) {
        std::size_t end = line.find_first_of(" \t\r", pos);
        if (end == std::string_view::npos) {
            end = line.size();
        }
        tokens.push_back(line.substr(pos, end - pos));
        pos = line.find_first_not_of(" \t\r", end);
        if (pos == std::string_view::npos) {
            break;
        }
    }
    return tokens;
}

inline std::uint32_t parse_u32(std::string_view token, std::size_t line_no) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": '" +
                                          std::string(token) +
                                          "' is not a non-negative 32-bit integer");
    }
    return value;
}

}  // namespace rainbow::detail
