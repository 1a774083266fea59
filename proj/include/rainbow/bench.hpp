#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rainbow {

struct BenchRow {
    std::size_t delta = 0;
    std::size_t n = 0;
    std::size_t m = 0;  // edge count of the first instance in the cell
    std::size_t reps = 0;
    std::int64_t median_ns = 0;
    std::size_t matching_size = 0;  // smallest size seen across the reps
};

struct DoublingRatio {
    std::size_t delta = 0;
    std::size_t n = 0;  // ratio is median(2n) / median(n)
    double ratio = 0.0;
    bool pass = false;  // ratio <= kDoublingRatioLimit; otherwise WARN
};

inline constexpr double kDoublingRatioLimit = 5.0;

struct BenchResult {
    std::vector<BenchRow> rows;
    std::vector<DoublingRatio> ratios;
};

/// Times find_rainbow_matching over a (delta, n) grid of seeded
/// random_properly_colored instances. Every n must exceed the general
/// threshold for its delta and reps must be at least 3. Generation and
/// validation are outside the timed region.
BenchResult scaling_run(std::span<const std::size_t> deltas, std::span<const std::size_t> sizes,
                        std::size_t reps, std::uint64_t seed);

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);
std::string format_ratios(std::span<const DoublingRatio> ratios);

}  // namespace rainbow
