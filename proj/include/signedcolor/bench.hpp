#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace signedcolor {

struct BenchRow {
    int n = 0;
    double mean_runtime_s = 0.0;
    int trials = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;       // sorted by n
    double fitted_exponent = 0.0;     // least-squares slope of log t vs log n
};

/// Times five_list_color on random stacked triangulations with uniform
/// 5-lists. Generation and serialization are outside the timed region.
BenchReport run_bench(const std::vector<int>& sizes, int trials, std::uint64_t seed);

std::string serialize_bench_report(const BenchReport& report);

}  // namespace signedcolor
