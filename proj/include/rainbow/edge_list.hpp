#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Text format: one edge per line as "u v c" (non-negative integers below
// 2^32). Blank lines and lines starting with '#' are skipped. Errors carry
// ErrorCode::Parse and name the offending line.
std::vector<Edge> parse_edge_list(std::istream& in);
std::vector<Edge> read_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, std::span<const Edge> edges);

}  // namespace rainbow
