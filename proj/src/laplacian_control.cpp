#include "walkctl/laplacian_control.hpp"

#include "walkctl/errors.hpp"

namespace walkctl {

Vector edge_vector(int v, Vertex i, Vertex j) {
    if (i == j || i < 0 || j < 0 || i >= v || j >= v) throw InputError("edge vector needs two distinct vertices in range");
    Vector h(static_cast<std::size_t>(v), Rational(0));
    h[static_cast<std::size_t>(i)] = 1;
    h[static_cast<std::size_t>(j)] = -1;
    return h;
}

Matrix edge_matrix(int v, Vertex i, Vertex j) {
    const Vector h = edge_vector(v, i, j);
    const auto n = static_cast<std::size_t>(v);
    Matrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m(a, b) = h[a] * h[b];
    return m;
}

EdgePerturbation edge_perturbation_polys(const Graph& g, Vertex i, Vertex j, EdgeMode mode) {
    const Vector h = edge_vector(g.order(), i, j);
    const bool present = g.has_edge(i, j);
    if (mode == EdgeMode::add && present) throw InputError("edge already present");
    if (mode == EdgeMode::remove && !present) throw InputError("edge not present");

    Graph y = g;
    if (mode == EdgeMode::add)
        y.add_edge(i, j);
    else
        y.remove_edge(i, j);

    const Matrix l = laplacian(g);
    const IntPoly phi = char_poly(l);
    const IntPoly form = to_int_poly(resolvent_form(l, h, h));
    EdgePerturbation out{char_poly(laplacian(y)), mode == EdgeMode::add ? phi - form : phi + form};
    if (!(out.direct == out.via_formula)) throw ConsistencyError("Laplacian edge perturbation identity failed");
    return out;
}

LaplacianPairReport laplacian_pair_report(const Graph& g, Vertex i, Vertex j) {
    const int v = g.order();
    const Vector h = edge_vector(v, i, j);
    const Matrix l = laplacian(g);
    const auto n = static_cast<std::size_t>(v);
    const Matrix k = krylov_matrix(l, h, n);

    std::vector<Vector> bordered{Vector(n, Rational(1))};
    for (std::size_t c = 0; c < n; ++c) bordered.push_back(k.column(c));

    LaplacianPairReport r;
    r.module_dimension = mat_rank(k);
    r.bordered_rank = mat_rank(Matrix::from_columns(bordered));
    r.pole_count = distinct_pole_count({to_int_poly(resolvent_form(l, h, h)), char_poly(l)});
    r.controllable = r.module_dimension + 1 == n;
    return r;
}

bool laplacian_pair_controllable(const Graph& g, Vertex i, Vertex j) {
    return laplacian_pair_report(g, i, j).controllable;
}

bool laplacian_pair_automorphism_check(const Graph& g, Vertex i, Vertex j, int bound) {
    if (!laplacian_pair_controllable(g, i, j)) throw InputError("pair is not Laplacian-controllable");
    const VertexSet s(g.order(), {i, j});
    for (const auto& p : automorphisms(g, bound)) {
        bool identity = true;
        for (std::size_t x = 0; x < p.size(); ++x) identity = identity && p[x] == static_cast<Vertex>(x);
        if (!identity && fixes_setwise(p, s)) return false;
    }
    return true;
}

} // namespace walkctl
