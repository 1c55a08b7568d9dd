// walkctl: controllability analyses, census and linear-system reports.
//
// Exit codes: 0 ok, 2 input error, 3 guard exceeded, 4 internal consistency
// failure (two equivalent characterisations disagreed).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "walkctl/census.hpp"
#include "walkctl/controllability.hpp"
#include "walkctl/errors.hpp"
#include "walkctl/isomorphism.hpp"
#include "walkctl/lti.hpp"
#include "walkctl/report.hpp"

using namespace walkctl;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitConsistency = 4;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file " + path);
    out << text;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
    std::vector<Vertex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InputError("bad vertex '" + item + "'");
        }
        if (used != item.size()) throw InputError("bad vertex '" + item + "'");
        out.push_back(v);
    }
    return out;
}

VertexSet parse_subset(const Graph& g, const std::string& text) {
    if (text == "full") return VertexSet::all(g.order());
    if (text == "none") return VertexSet(g.order(), {});
    return VertexSet(g.order(), parse_vertex_list(text));
}

// ------------------------------------------------------------------ analyze

struct AnalyzeArgs {
    std::string graph6;
    std::string subset = "full";
    bool walk_matrix = false;
    std::string out;
};

int cmd_analyze(const AnalyzeArgs& args) {
    const Graph g = parse_graph6(args.graph6);
    const int v = g.order();
    std::vector<VertexSet> subsets;
    if (args.subset == "vertices") {
        for (Vertex u = 0; u < v; ++u) subsets.push_back(VertexSet::single(v, u));
    } else if (args.subset == "all") {
        if (v > kSubsetGuard) throw GuardError("subset enumeration limited to 16 vertices");
        for (unsigned long long mask = 0; mask < (1ULL << v); ++mask) subsets.push_back(VertexSet::from_mask(v, mask));
    } else {
        subsets.push_back(parse_subset(g, args.subset));
    }

    Json doc;
    doc["schema"] = kAnalyzeSchema;
    doc["graph6"] = emit_graph6(g);
    doc["n"] = v;
    doc["subset_mode"] = args.subset;
    Json reports = Json::array();
    for (const auto& s : subsets) {
        const PairSpec p = PairSpec::from_subset(g, s);
        reports.push_back(report_to_json(p, full_report(p), args.walk_matrix));
    }
    doc["reports"] = reports;
    write_output(args.out, doc.dump(2) + "\n");
    return 0;
}

// ------------------------------------------------------------------- census

struct CensusArgs {
    std::string input;
    std::string mode = "vertices";
    int workers = 1;
    std::string format = "csv";
    bool lenient = false;
    bool serial = false;
    std::string out;
    std::string summary;
    int max_n = 62;
};

int cmd_census(const CensusArgs& args) {
    std::vector<std::string> lines;
    {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (!args.input.empty() && args.input != "-") {
            file.open(args.input);
            if (!file) throw InputError("cannot open " + args.input);
            in = &file;
        }
        std::string line;
        while (std::getline(*in, line)) lines.push_back(line);
    }
    CensusOptions opts;
    opts.mode = parse_census_mode(args.mode);
    opts.workers = args.workers;
    opts.max_n = args.max_n;
    const CensusResult result = args.serial ? run_census_serial(lines, opts) : run_census_parallel(lines, opts);

    const Json summary = census_summary_json(result);
    if (args.format == "json") {
        Json doc = summary;
        doc["rows"] = census_rows_json(result);
        write_output(args.out, doc.dump(2) + "\n");
        if (!args.summary.empty()) write_output(args.summary, summary.dump(2) + "\n");
    } else {
        write_output(args.out, census_csv(result));
        if (!args.summary.empty())
            write_output(args.summary, summary.dump(2) + "\n");
        else
            std::cerr << summary.dump(2) << "\n";
    }
    if (result.guard_errors > 0) return kExitGuard;
    if (result.input_errors > 0 && !args.lenient) return kExitInput;
    return 0;
}

// ----------------------------------------------------------------- isocheck

struct IsocheckArgs {
    std::string graph6_a, subset_a, graph6_b, subset_b;
    std::string out;
};

int cmd_isocheck(const IsocheckArgs& args) {
    const Graph ga = parse_graph6(args.graph6_a);
    const Graph gb = parse_graph6(args.graph6_b);
    if (ga.order() != gb.order()) throw InputError("isocheck: graphs have different orders");
    const VertexSet sa = parse_subset(ga, args.subset_a);
    const VertexSet sb = parse_subset(gb, args.subset_b);
    const PairSpec pa = PairSpec::from_subset(ga, sa);
    const PairSpec pb = PairSpec::from_subset(gb, sb);

    const bool by_rational_function = pairs_isomorphic(pa, pb);
    const bool by_cones = pairs_isomorphic_via_cones(ga, sa, gb, sb);
    if (by_rational_function != by_cones)
        throw ConsistencyError("rational-function and cone routes disagree on pair isomorphism");

    Json doc;
    doc["schema"] = kIsocheckSchema;
    const bool ctrl_a = is_controllable_rank(pa);
    const bool ctrl_b = is_controllable_rank(pb);
    doc["a"] = {{"graph6", emit_graph6(ga)}, {"subset", sa.members()}, {"controllable", ctrl_a}};
    doc["b"] = {{"graph6", emit_graph6(gb)}, {"subset", sb.members()}, {"controllable", ctrl_b}};
    doc["isomorphic"] = by_rational_function;
    doc["routes"] = {{"rational_function", by_rational_function}, {"cone_cospectral", by_cones}};
    if (by_rational_function && ctrl_a && ctrl_b) {
        // q_matrix throws ConsistencyError unless all three properties hold.
        const Matrix q = q_matrix(pa, pb);
        Json jq;
        jq["matrix"] = to_json(q);
        jq["orthogonal"] = true;
        jq["conjugates_adjacency"] = true;
        jq["maps_vector"] = true;
        if (ga == gb) {
            jq["involution"] = q_involution_check(ga, sa, sb);
        } else {
            jq["involution"] = nullptr;
        }
        doc["q"] = jq;
    } else {
        doc["q"] = nullptr;
    }
    write_output(args.out, doc.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------- lti

struct LtiArgs {
    std::string spec;
    std::string out;
};

int cmd_lti(const LtiArgs& args) {
    Json spec;
    {
        std::ifstream in(args.spec);
        if (!in) throw InputError("cannot open " + args.spec);
        try {
            spec = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("malformed system spec: ") + e.what());
        }
    }
    if (!spec.is_object() || !spec.contains("A") || !spec.contains("b") || !spec.contains("c"))
        throw InputError("system spec needs A, b and c");
    DiscreteSystem sys;
    sys.a = matrix_from_json(spec["A"]);
    sys.b = vector_from_json(spec["b"]);
    sys.c = vector_from_json(spec["c"]);
    const std::size_t d = sys.a.rows();
    sys.x0 = spec.contains("x0") ? vector_from_json(spec["x0"]) : Vector(d, Rational(0));
    sys.validate();
    std::size_t order = 3 * d;
    if (spec.contains("order")) {
        if (!spec["order"].is_number_unsigned()) throw InputError("order must be a non-negative integer");
        order = spec["order"].get<std::size_t>();
    }
    Vector inputs = spec.contains("inputs") ? vector_from_json(spec["inputs"]) : Vector(order, Rational(0));
    if (inputs.size() < order) throw InputError("fewer inputs than order");

    Json doc;
    doc["schema"] = kLtiSchema;
    doc["dimension"] = d;
    const RationalFunction tf = transfer_function(sys);
    doc["transfer_function"] = {{"numerator", to_json(tf.numerator)}, {"denominator", to_json(tf.denominator)}};
    doc["controllable"] = is_controllable(sys);
    doc["observable"] = is_observable(sys);
    const IdentityCheck check = generating_identity_check(sys, inputs, order);
    doc["identity_check"] = {{"order", order},
                             {"ok", check.ok},
                             {"first_mismatch", check.first_mismatch ? Json(*check.first_mismatch) : Json(nullptr)}};

    if (spec.contains("recover")) {
        const Json& rec = spec["recover"];
        if (!rec.is_object() || !rec.contains("m") || !rec["m"].is_number_unsigned())
            throw InputError("recover needs a non-negative integer m");
        const auto m = rec["m"].get<std::size_t>();
        if (inputs.size() < m) throw InputError("fewer inputs than the recovery time m");
        const Vector xm = simulate(sys, inputs, m).back();
        // Zero input from time m on: outputs are c^T A^k x_m.
        DiscreteSystem from_m = sys;
        from_m.x0 = xm;
        const Vector zeros(d, Rational(0));
        const std::vector<Rational> observed = outputs(from_m, simulate(from_m, zeros, d == 0 ? 0 : d - 1));
        Json jr;
        jr["m"] = m;
        try {
            const Vector recovered = recover_state(sys, observed, m);
            jr["state"] = to_json(recovered);
            jr["matches_simulation"] = recovered == xm;
        } catch (const InputError& e) {
            jr["error"] = e.what();
        }
        doc["recovery"] = jr;
    }
    write_output(args.out, doc.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Walk-matrix controllability toolkit"};
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    auto* a = app.add_subcommand("analyze", "Controllability report for one graph and subset(s)");
    a->add_option("graph6", analyze.graph6, "Graph in graph6 format")->required();
    a->add_option("--subset,-s", analyze.subset,
                  "full (S = V), vertices (every singleton), all (every subset) or a comma-separated vertex list");
    a->add_flag("--walk-matrix", analyze.walk_matrix, "Include the walk matrix in each report");
    a->add_option("--out,-o", analyze.out, "Output file (default stdout)");

    CensusArgs census;
    auto* c = app.add_subcommand("census", "Controllability census over graph6 lines");
    c->add_option("--input,-i", census.input, "graph6 file (default stdin)");
    c->add_option("--mode", census.mode, "full | vertices | subsets")
        ->check(CLI::IsMember({"full", "vertices", "subsets"}));
    c->add_option("--workers,-j", census.workers, "Worker threads")->check(CLI::PositiveNumber);
    c->add_option("--format", census.format, "csv (detail rows) or json (summary and rows)")
        ->check(CLI::IsMember({"csv", "json"}));
    c->add_flag("--lenient", census.lenient, "Exit 0 even if some lines were malformed");
    c->add_flag("--serial", census.serial, "Use the serial reference kernel");
    c->add_option("--out,-o", census.out, "Detail output file (default stdout)");
    c->add_option("--summary", census.summary, "JSON summary file (csv format: default stderr)");
    c->add_option("--max-n", census.max_n, "Skip graphs with more vertices")->check(CLI::Range(0, 62));

    IsocheckArgs iso;
    auto* i = app.add_subcommand("isocheck", "Decide isomorphism of two (graph, subset) pairs");
    i->add_option("graph6_a", iso.graph6_a)->required();
    i->add_option("subset_a", iso.subset_a)->required();
    i->add_option("graph6_b", iso.graph6_b)->required();
    i->add_option("subset_b", iso.subset_b)->required();
    i->add_option("--out,-o", iso.out, "Output file (default stdout)");

    LtiArgs lti;
    auto* l = app.add_subcommand("lti", "Transfer function and checks for a discrete linear system");
    l->add_option("spec", lti.spec, "JSON system spec: A, b, c, x0, inputs, order, recover")->required();
    l->add_option("--out,-o", lti.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (a->parsed()) return cmd_analyze(analyze);
        if (c->parsed()) return cmd_census(census);
        if (i->parsed()) return cmd_isocheck(iso);
        if (l->parsed()) return cmd_lti(lti);
    } catch (const InputError& e) {
        std::cerr << Json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
        return kExitInput;
    } catch (const GuardError& e) {
        std::cerr << Json{{"error", "guard"}, {"message", e.what()}}.dump() << "\n";
        return kExitGuard;
    } catch (const ConsistencyError& e) {
        std::cerr << Json{{"error", "internal_consistency"}, {"message", e.what()}}.dump() << "\n";
        return kExitConsistency;
    }
    return 0;
}
