#pragma once

// Census over a stream of graph6 lines. Two kernels with identical output:
// a serial reference and an OpenMP version parallel over input lines.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace walkctl {

/// full: S = V only. vertices: S = V and every singleton. subsets: every
/// subset as well (n <= 16).
enum class CensusMode { full, vertices, subsets };

CensusMode parse_census_mode(std::string_view s);
std::string_view to_string(CensusMode m);

inline constexpr int kSubsetGuard = 16;

enum class RowStatus { ok, input_error, guard_error, skipped };

struct CensusRow {
    std::size_t line = 0; // 1-based input line number
    std::string graph6;
    RowStatus status = RowStatus::ok;
    std::string error;
    int n = 0;
    bool controllable = false; // S = V
    std::size_t rank = 0;      // rank of W_V
    long dual_degree = -1;
    std::optional<int> controllable_vertices;
    std::optional<bool> irreducible;            // phi(X) irreducible over Q
    std::optional<long> controllable_subsets;   // subsets mode

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusCounts {
    int n = 0;
    std::size_t total = 0;
    std::size_t controllable = 0;
    std::optional<std::size_t> with_controllable_vertex;
    std::size_t irreducible = 0;
    std::optional<std::size_t> controllable_subsets;

    double controllable_fraction() const { return total ? static_cast<double>(controllable) / static_cast<double>(total) : 0.0; }
    friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

struct CensusResult {
    CensusMode mode = CensusMode::vertices;
    std::vector<CensusRow> rows; // input order
    std::vector<CensusCounts> per_n;
    std::size_t input_errors = 0;
    std::size_t guard_errors = 0;
    std::size_t skipped = 0;
};

struct CensusOptions {
    CensusMode mode = CensusMode::vertices;
    int workers = 1;
    int max_n = 62;
};

/// Analyses one graph6 line. Input and guard problems are recorded in the
/// row; ConsistencyError propagates. Also cross-checks that an irreducible
/// phi forces every tested pair to be controllable.
CensusRow analyze_census_line(std::size_t line, std::string_view text, CensusMode mode, int max_n = 62);

/// Reference kernel.
CensusResult run_census_serial(const std::vector<std::string>& lines, const CensusOptions& opts);

/// OpenMP kernel with opts.workers threads; output identical to the serial one.
CensusResult run_census_parallel(const std::vector<std::string>& lines, const CensusOptions& opts);

/// Fixed-column CSV of the detail rows (header included).
std::string census_csv(const CensusResult& r);

inline constexpr std::string_view kCensusCsvHeader =
    "line,graph6,n,status,controllable,rank,dual_degree,controllable_vertices,irreducible,controllable_subsets";

} // namespace walkctl
