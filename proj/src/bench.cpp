#include "rainbow/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <ostream>
#include <sstream>

#include "rainbow/generators.hpp"
#include "rainbow/greedy.hpp"

namespace rainbow {

BenchResult scaling_run(std::span<const std::size_t> deltas, std::span<const std::size_t> sizes,
                        std::size_t reps, std::uint64_t seed) {
    if (deltas.empty() || sizes.empty()) {
        throw Error(ErrorCode::InvalidArgument, "benchmark grid is empty");
    }
    if (reps < 3) {
        throw Error(ErrorCode::InvalidArgument, "need at least 3 repetitions per cell");
    }
    for (std::size_t delta : deltas) {
        for (std::size_t n : sizes) {
            if (delta == 0 || !threshold(delta, false).below(static_cast<std::int64_t>(n))) {
                throw Error(ErrorCode::InvalidArgument,
                            "n=" + std::to_string(n) + " is not above the threshold for delta=" +
                                std::to_string(delta));
            }
        }
    }

    BenchResult result;
    std::uint64_t instance = 0;
    for (std::size_t delta : deltas) {
        const std::size_t first_row = result.rows.size();
        for (std::size_t n : sizes) {
            BenchRow row{delta, n, 0, reps, 0, std::numeric_limits<std::size_t>::max()};
            std::vector<std::int64_t> times;
            for (std::size_t r = 0; r < reps; ++r) {
                const ColoredGraph g = random_properly_colored(n, delta, seed + instance++);
                if (r == 0) row.m = g.edge_count();
                const auto start = std::chrono::steady_clock::now();
                const PipelineReport report = find_rainbow_matching(g, false);
                const auto stop = std::chrono::steady_clock::now();
                times.push_back(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
                row.matching_size = std::min(row.matching_size, report.matching.size());
            }
            std::sort(times.begin(), times.end());
            row.median_ns = times[times.size() / 2];
            result.rows.push_back(row);
        }
        for (std::size_t i = first_row; i < result.rows.size(); ++i) {
            for (std::size_t j = first_row; j < result.rows.size(); ++j) {
                if (result.rows[j].n == 2 * result.rows[i].n && result.rows[i].median_ns > 0) {
                    const double ratio = static_cast<double>(result.rows[j].median_ns) /
                                         static_cast<double>(result.rows[i].median_ns);
                    result.ratios.push_back(
                        {delta, result.rows[i].n, ratio, ratio <= kDoublingRatioLimit});
                }
            }
        }
    }
    return result;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
    out << "delta,n,m,reps,median_ns,matching_size\n";
    for (const BenchRow& r : rows) {
        out << r.delta << ',' << r.n << ',' << r.m << ',' << r.reps << ',' << r.median_ns << ','
            << r.matching_size << '\n';
    }
}

std::string format_ratios(std::span<const DoublingRatio> ratios) {
    std::ostringstream out;
    for (const DoublingRatio& r : ratios) {
        out << "delta=" << r.delta << " n=" << r.n << "->" << 2 * r.n << " ratio=" << r.ratio << ' '
            << (r.pass ? "PASS" : "WARN") << '\n';
    }
    return out.str();
}

}  // namespace rainbow
