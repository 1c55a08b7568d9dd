#include "walkctl/report.hpp"

#include "walkctl/errors.hpp"

namespace walkctl {

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const Vector& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(to_json(q));
    return a;
}

Json to_json(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

Json to_json(const IntPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(c.get_str());
    return a;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (!j.is_string()) throw InputError("expected an integer or a rational string, got " + j.dump());
    const std::string s = j.get<std::string>();
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) throw InputError("malformed rational '" + s + "'");
    q.canonicalize();
    return q;
}

Vector vector_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array");
    Vector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of rows");
    std::vector<Vector> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    if (rows.empty()) return {};
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw InputError("matrix rows have different lengths");
    return Matrix::from_columns(rows).transpose();
}

Json report_to_json(const PairSpec& p, const ControllabilityReport& r, bool include_walk_matrix) {
    Json j;
    if (p.subset()) {
        j["subset"] = p.subset()->members();
    } else {
        j["vector"] = to_json(p.vector());
    }
    j["controllable"] = r.controllable;
    j["rank"] = r.rank_of_w;
    j["support_size"] = r.support_size;
    j["dual_degree"] = r.dual_degree;
    switch (r.radius_kind) {
    case RadiusKind::finite: j["covering_radius"] = r.covering_radius; break;
    case RadiusKind::infinite: j["covering_radius"] = "infinite"; break;
    case RadiusKind::not_applicable: j["covering_radius"] = nullptr; break;
    }
    j["radius_bound_holds"] = r.radius_bound_holds ? Json(*r.radius_bound_holds) : Json(nullptr);
    j["degenerate"] = r.degenerate;
    Json v;
    v["rank"] = r.verdicts.rank;
    v["poles"] = r.verdicts.poles;
    v["coprime"] = r.verdicts.coprime ? Json(*r.verdicts.coprime) : Json(nullptr);
    j["verdicts"] = v;
    j["char_poly"] = to_json(r.char_poly);
    j["numerator_poly"] = to_json(r.numerator);
    if (include_walk_matrix) j["walk_matrix"] = to_json(walk_matrix(p));
    return j;
}

namespace {

Json optional_count(const std::optional<std::size_t>& c) { return c ? Json(*c) : Json(nullptr); }

} // namespace

Json census_summary_json(const CensusResult& r) {
    Json j;
    j["schema"] = kCensusSchema;
    j["mode"] = std::string(to_string(r.mode));
    j["graphs"] = r.rows.size();
    j["input_errors"] = r.input_errors;
    j["guard_errors"] = r.guard_errors;
    j["skipped"] = r.skipped;
    Json errors = Json::array();
    for (const auto& row : r.rows)
        if (row.status == RowStatus::input_error || row.status == RowStatus::guard_error)
            errors.push_back({{"line", row.line}, {"error", row.error}});
    j["errors"] = errors;
    Json per_n = Json::array();
    for (const auto& c : r.per_n) {
        Json e;
        e["n"] = c.n;
        e["total"] = c.total;
        e["controllable"] = c.controllable;
        e["with_controllable_vertex"] = optional_count(c.with_controllable_vertex);
        e["irreducible"] = c.irreducible;
        e["controllable_subsets"] = optional_count(c.controllable_subsets);
        Rational fraction(Integer(static_cast<unsigned long>(c.controllable)),
                          Integer(static_cast<unsigned long>(c.total == 0 ? 1 : c.total)));
        fraction.canonicalize();
        e["controllable_fraction"] = fraction.get_str();
        per_n.push_back(e);
    }
    j["per_n"] = per_n;
    return j;
}

Json census_rows_json(const CensusResult& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json e;
        e["line"] = row.line;
        e["graph6"] = row.graph6;
        if (row.status != RowStatus::ok) {
            e["status"] = row.status == RowStatus::skipped ? "skipped"
                          : row.status == RowStatus::guard_error ? "guard_error" : "input_error";
            e["error"] = row.error;
            rows.push_back(e);
            continue;
        }
        e["status"] = "ok";
        e["n"] = row.n;
        e["controllable"] = row.controllable;
        e["rank"] = row.rank;
        e["dual_degree"] = row.dual_degree;
        e["controllable_vertices"] = row.controllable_vertices ? Json(*row.controllable_vertices) : Json(nullptr);
        e["irreducible"] = row.irreducible ? Json(*row.irreducible) : Json(nullptr);
        e["controllable_subsets"] = row.controllable_subsets ? Json(*row.controllable_subsets) : Json(nullptr);
        rows.push_back(e);
    }
    return rows;
}

} // namespace walkctl
