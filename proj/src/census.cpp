#include "walkctl/census.hpp"

#include <exception>
#include <map>
#include <sstream>

#include <omp.h>

#include "walkctl/controllability.hpp"
#include "walkctl/errors.hpp"

namespace walkctl {

CensusMode parse_census_mode(std::string_view s) {
    if (s == "full") return CensusMode::full;
    if (s == "vertices") return CensusMode::vertices;
    if (s == "subsets") return CensusMode::subsets;
    throw InputError("unknown census mode '" + std::string(s) + "'");
}

std::string_view to_string(CensusMode m) {
    switch (m) {
    case CensusMode::full: return "full";
    case CensusMode::vertices: return "vertices";
    case CensusMode::subsets: return "subsets";
    }
    return "?";
}

CensusRow analyze_census_line(std::size_t line, std::string_view text, CensusMode mode, int max_n) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    CensusRow row;
    row.line = line;
    row.graph6 = std::string(text);
    Graph g;
    try {
        g = parse_graph6(text);
    } catch (const InputError& e) {
        row.status = RowStatus::input_error;
        row.error = e.what();
        return row;
    }
    row.n = g.order();
    if (row.n > max_n) {
        row.status = RowStatus::skipped;
        return row;
    }
    if (mode == CensusMode::subsets && row.n > kSubsetGuard) {
        row.status = RowStatus::guard_error;
        row.error = "subset enumeration limited to " + std::to_string(kSubsetGuard) + " vertices";
        return row;
    }

    const ControllabilityReport full = full_report(PairSpec::from_subset(g, VertexSet::all(row.n)));
    row.controllable = full.controllable;
    row.rank = full.rank_of_w;
    row.dual_degree = full.dual_degree;
    if (row.n >= 1 && row.n <= kDefaultIrreducibleBound) row.irreducible = is_charpoly_irreducible(g);

    if (mode != CensusMode::full) {
        int count = 0;
        for (Vertex u = 0; u < row.n; ++u)
            count += full_report(PairSpec::from_subset(g, VertexSet::single(row.n, u))).controllable;
        row.controllable_vertices = count;
    }
    if (mode == CensusMode::subsets) {
        long count = 0;
        for (unsigned long long mask = 0; mask < (1ULL << row.n); ++mask)
            count += full_report(PairSpec::from_subset(g, VertexSet::from_mask(row.n, mask))).controllable;
        row.controllable_subsets = count;
    }

    if (row.irreducible.value_or(false) &&
        (!row.controllable || (row.controllable_vertices && *row.controllable_vertices != row.n)))
        throw ConsistencyError("irreducible characteristic polynomial but an uncontrollable pair: " + row.graph6);
    return row;
}

namespace {

CensusResult aggregate(CensusMode mode, std::vector<CensusRow> rows) {
    CensusResult r;
    r.mode = mode;
    std::map<int, CensusCounts> by_n;
    for (const auto& row : rows) {
        switch (row.status) {
        case RowStatus::input_error: ++r.input_errors; continue;
        case RowStatus::guard_error: ++r.guard_errors; continue;
        case RowStatus::skipped: ++r.skipped; continue;
        case RowStatus::ok: break;
        }
        CensusCounts& c = by_n[row.n];
        c.n = row.n;
        ++c.total;
        c.controllable += row.controllable;
        c.irreducible += row.irreducible.value_or(false);
        if (row.controllable_vertices)
            c.with_controllable_vertex = c.with_controllable_vertex.value_or(0) + (*row.controllable_vertices > 0);
        if (row.controllable_subsets)
            c.controllable_subsets = c.controllable_subsets.value_or(0) + static_cast<std::size_t>(*row.controllable_subsets);
    }
    for (auto& [n, c] : by_n) r.per_n.push_back(c);
    r.rows = std::move(rows);
    return r;
}

} // namespace

CensusResult run_census_serial(const std::vector<std::string>& lines, const CensusOptions& opts) {
    std::vector<CensusRow> rows;
    rows.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i)
        rows.push_back(analyze_census_line(i + 1, lines[i], opts.mode, opts.max_n));
    return aggregate(opts.mode, std::move(rows));
}

CensusResult run_census_parallel(const std::vector<std::string>& lines, const CensusOptions& opts) {
    const auto count = static_cast<long>(lines.size());
    std::vector<CensusRow> rows(lines.size());
    std::vector<std::exception_ptr> failures(lines.size());
    const int workers = opts.workers > 0 ? opts.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
    for (long i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            rows[k] = analyze_census_line(k + 1, lines[k], opts.mode, opts.max_n);
        } catch (...) {
            failures[k] = std::current_exception();
        }
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);
    return aggregate(opts.mode, std::move(rows));
}

namespace {

std::string_view status_name(RowStatus s) {
    switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::input_error: return "input_error";
    case RowStatus::guard_error: return "guard_error";
    case RowStatus::skipped: return "skipped";
    }
    return "?";
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

} // namespace

std::string census_csv(const CensusResult& r) {
    std::ostringstream os;
    os << kCensusCsvHeader << '\n';
    for (const auto& row : r.rows) {
        os << row.line << ',' << csv_field(row.graph6) << ',';
        if (row.status != RowStatus::input_error) os << row.n;
        os << ',' << status_name(row.status) << ',';
        if (row.status != RowStatus::ok) {
            os << ",,,,,\n";
            continue;
        }
        os << (row.controllable ? 1 : 0) << ',' << row.rank << ',' << row.dual_degree << ',';
        if (row.controllable_vertices) os << *row.controllable_vertices;
        os << ',';
        if (row.irreducible) os << (*row.irreducible ? 1 : 0);
        os << ',';
        if (row.controllable_subsets) os << *row.controllable_subsets;
        os << '\n';
    }
    return os.str();
}

} // namespace walkctl
