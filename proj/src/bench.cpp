#include "signedcolor/bench.hpp"

#include <chrono>
#include <cmath>
#include <json.hpp>

#include "signedcolor/instance.hpp"
#include "signedcolor/solver.hpp"

namespace signedcolor {

BenchReport run_bench(const std::vector<int>& sizes, int trials, std::uint64_t seed) {
    if (trials < 3) throw Error(errc::precondition, "bench needs trials >= 3");
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        if (sizes[i] >= sizes[i + 1]) {
            throw Error(errc::precondition, "bench sizes must be strictly ascending");
        }
    }
    BenchReport report;
    std::uint64_t instance_seed = seed;
    for (int n : sizes) {
        if (n < 3) throw Error(errc::precondition, "bench sizes must be at least 3");
        double total = 0.0;
        for (int t = 0; t < trials; ++t) {
            ++instance_seed;
            InstanceFile inst = gen_stacked_triangulation(n, instance_seed, 0.5);
            ListAssignment lists = gen_lists(inst, ListProfile::uniform(5), -10, 10, instance_seed);
            PlaneGraph pg = inst.plane_graph();
            const auto start = std::chrono::steady_clock::now();
            Coloring out = five_list_color(pg, lists);
            const auto stop = std::chrono::steady_clock::now();
            if (out.size() != static_cast<std::size_t>(n)) {
                throw Error(errc::internal, "bench trial produced a partial coloring");
            }
            total += std::chrono::duration<double>(stop - start).count();
        }
        report.rows.push_back({n, total / trials, trials});
    }
    // Least-squares slope of log runtime against log n.
    const std::size_t m = report.rows.size();
    if (m >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& row : report.rows) {
            const double x = std::log(static_cast<double>(row.n));
            const double y = std::log(std::max(row.mean_runtime_s, 1e-9));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double denom = m * sxx - sx * sx;
        report.fitted_exponent = (m * sxy - sx * sy) / denom;
    }
    return report;
}

std::string serialize_bench_report(const BenchReport& report) {
    nlohmann::json doc;
    doc["format_version"] = 1;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"n", row.n}, {"mean_runtime_s", row.mean_runtime_s}, {"trials", row.trials}});
    }
    doc["rows"] = std::move(rows);
    doc["fitted_exponent"] = report.fitted_exponent;
    return doc.dump(2) + "\n";
}

}  // namespace signedcolor
