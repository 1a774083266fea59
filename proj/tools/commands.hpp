#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbow/graph.hpp"
#include "rainbow/greedy.hpp"

namespace rainbow::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kGuaranteeViolation = 2;

struct FindOptions {
    bool json = false;
    bool triangle_free = false;
    bool trace_check = true;
};

struct GenOptions {
    std::string kind;
    std::vector<std::size_t> params;
    std::uint64_t seed = 1;
    bool square = false;
    std::optional<std::filesystem::path> out;
};

struct BenchOptions {
    std::vector<std::size_t> deltas;
    std::vector<std::size_t> sizes;
    std::size_t reps = 5;
    std::uint64_t seed = 1;
    std::optional<std::filesystem::path> csv_out;
};

nlohmann::ordered_json run_report(const ColoredGraph& g, const PipelineReport& report,
                                  const std::vector<TraceViolation>& violations,
                                  std::int64_t elapsed_ns);

int cmd_find(const std::filesystem::path& input, const FindOptions& opts, std::ostream& out,
             std::ostream& err);
int cmd_verify(const std::filesystem::path& graph_path, const std::filesystem::path& matching_path,
               std::ostream& out, std::ostream& err);
int cmd_oracle(const std::filesystem::path& input, std::optional<std::size_t> k, std::size_t cap,
               std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_trace(const std::filesystem::path& input, bool triangle_free, std::ostream& out,
              std::ostream& err);

}  // namespace rainbow::cli
