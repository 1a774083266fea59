#include "rainbow/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "text_util.hpp"

namespace rainbow {

std::vector<Edge> parse_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = detail::split_data_line(line);
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() != 3) {
            throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                              ": expected 3 fields \"u v c\", found " +
                                              std::to_string(tokens.size()));
        }
        std::uint32_t values[3];
        for (int i = 0; i < 3; ++i) {
            values[i] = detail::parse_u32(tokens[i], line_no);
        }
        if (values[0] == values[1]) {
            throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line_no) +
                                                 ": self-loop at vertex " +
                                                 std::to_string(values[0]));
        }
        edges.push_back(Edge{values[0], values[1], values[2]});
    }
    return edges;
}

std::vector<Edge> read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Parse, "cannot open " + path.string());
    }
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, std::span<const Edge> edges) {
    for (const Edge& e : edges) {
        out << e.u << ' ' << e.v << ' ' << e.color << '\n';
    }
}

}  // namespace rainbow
