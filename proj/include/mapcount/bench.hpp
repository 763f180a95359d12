#pragma once

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mapcount/edge_vertex_table.hpp"
#include "mapcount/unrooted.hpp"

namespace mapcount {

struct BenchRow {
    int edges = 0;
    double rooted_seconds = 0.0;
    double unrooted_seconds = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;  // ascending in edges
    std::string machine;
    int threads = 1;
};

namespace detail {

inline std::string machine_descriptor() {
    std::string cpu = "unknown cpu";
    std::ifstream info("/proc/cpuinfo");
    std::string line;
    while (std::getline(info, line)) {
        if (line.rfind("model name", 0) == 0) {
            const auto colon = line.find(':');
            if (colon != std::string::npos) {
                cpu = line.substr(colon + 1);
                while (!cpu.empty() && cpu.front() == ' ') cpu.erase(cpu.begin());
            }
            break;
        }
    }
    return cpu + ", " + std::to_string(std::thread::hardware_concurrency()) + " hardware threads";
}

}  // namespace detail

/**
 * End-to-end wall-clock trials: for each edge bound n (multiples of
 * `step` up to `max_edges`) build the full bivariate rooted table with
 * genus up to floor(n/2), then the unrooted table from it, timing each
 * phase. Trials run sequentially so they cannot disturb each other.
 */
inline BenchReport run_trials(int max_edges, int step, int threads = 1) {
    if (step < 1) throw std::invalid_argument("run_trials: step must be >= 1");
    if (max_edges < 0) throw std::invalid_argument("run_trials: negative edge bound");

    BenchReport report;
    report.machine = detail::machine_descriptor();
    report.threads = threads;

    using clock = std::chrono::steady_clock;
    for (int n = step; n <= max_edges; n += step) {
        BenchRow row;
        row.edges = n;
        const auto t0 = clock::now();
        auto rooted = reinterpret_as_vertices(build_edge_vertex_table(n / 2, n, threads));
        const auto t1 = clock::now();
        auto unrooted = build_unrooted_table(rooted, threads);
        const auto t2 = clock::now();
        (void)unrooted;
        row.rooted_seconds = std::chrono::duration<double>(t1 - t0).count();
        row.unrooted_seconds = std::chrono::duration<double>(t2 - t1).count();
        report.rows.push_back(row);
    }
    return report;
}

inline std::string format_text(const BenchReport& report) {
    std::ostringstream os;
    os << "machine: " << report.machine << "\n";
    os << "threads: " << report.threads << "\n";
    os << std::setw(6) << "n" << std::setw(16) << "rooted (s)" << std::setw(16) << "unrooted (s)" << "\n";
    os << std::fixed << std::setprecision(3);
    for (const auto& row : report.rows)
        os << std::setw(6) << row.edges << std::setw(16) << row.rooted_seconds << std::setw(16)
           << row.unrooted_seconds << "\n";
    return os.str();
}

inline std::string format_csv(const BenchReport& report) {
    std::ostringstream os;
    os << "edges,rooted_seconds,unrooted_seconds\n";
    os << std::fixed << std::setprecision(6);
    for (const auto& row : report.rows)
        os << row.edges << ',' << row.rooted_seconds << ',' << row.unrooted_seconds << "\n";
    return os.str();
}

// Rows must be ascending in n with nonnegative times; growth should be
// monotone once above the timer jitter floor.
inline bool validate(const BenchReport& report, double jitter_floor = 0.05) {
    int prev_edges = 0;
    double prev_rooted = 0.0;
    for (const auto& row : report.rows) {
        if (row.edges <= prev_edges) return false;
        if (row.rooted_seconds < 0 || row.unrooted_seconds < 0) return false;
        if (row.rooted_seconds + jitter_floor < prev_rooted) return false;
        prev_edges = row.edges;
        prev_rooted = std::max(prev_rooted, row.rooted_seconds);
    }
    return true;
}

}  // namespace mapcount
