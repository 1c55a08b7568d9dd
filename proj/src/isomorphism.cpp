#include "walkctl/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "walkctl/errors.hpp"

namespace walkctl {

namespace {

void require_same_order(int a, int b) {
    if (a != b) throw InputError("pairs must have the same number of vertices");
}

} // namespace

bool pairs_isomorphic(const PairSpec& p1, const PairSpec& p2) {
    require_same_order(p1.order(), p2.order());
    if (!(char_poly(adjacency(p1.graph())) == char_poly(adjacency(p2.graph())))) return false;
    return numerator_form(p1) == numerator_form(p2);
}

bool pairs_isomorphic_via_cones(const Graph& x, const VertexSet& s, const Graph& y, const VertexSet& t) {
    require_same_order(x.order(), y.order());
    if (!(char_poly(adjacency(x)) == char_poly(adjacency(y)))) return false;
    return char_poly(adjacency(cone(x, s))) == char_poly(adjacency(cone(y, t)));
}

Matrix q_matrix(const PairSpec& p1, const PairSpec& p2) {
    require_same_order(p1.order(), p2.order());
    const Matrix ws = walk_matrix(p1);
    const Matrix wt = walk_matrix(p2);
    const auto n = static_cast<std::size_t>(p1.order());
    if (mat_rank(ws) != n || mat_rank(wt) != n) throw InputError("q_matrix: both pairs must be controllable");
    if (!pairs_isomorphic(p1, p2)) throw InputError("q_matrix: pairs are not isomorphic");

    const Matrix q = wt * inverse(ws);
    const Matrix a = adjacency(p1.graph());
    const Matrix b = adjacency(p2.graph());
    if (!(q.transpose() * q == Matrix::identity(n)))
        throw ConsistencyError("q_matrix: Q is not orthogonal");
    if (!(q * a * q.transpose() == b)) throw ConsistencyError("q_matrix: Q A Q^T != B");
    if (!(q.apply(p1.vector()) == p2.vector())) throw ConsistencyError("q_matrix: Q y != z");
    return q;
}

bool has_swap_block(const Matrix& q, Vertex u, Vertex w) {
    const auto n = q.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const auto uu = static_cast<std::size_t>(u), ww = static_cast<std::size_t>(w);
        const Rational want_u = i == ww ? 1 : 0;
        const Rational want_w = i == uu ? 1 : 0;
        if (q(i, uu) != want_u || q(i, ww) != want_w) return false;
    }
    return true;
}

bool q_involution_check(const Graph& g, const VertexSet& s, const VertexSet& t) {
    const Matrix q = q_matrix(PairSpec::from_subset(g, s), PairSpec::from_subset(g, t));
    const Matrix a = adjacency(g);
    const auto n = static_cast<std::size_t>(g.order());
    bool ok = q * a == a * q && q * q == Matrix::identity(n) && q.is_symmetric();
    if (ok && s.size() == 1 && t.size() == 1)
        ok = has_swap_block(q, s.members().front(), t.members().front());
    return ok;
}

Permutation canonical_order(const Graph& g) {
    const Matrix w = walk_matrix(PairSpec::from_subset(g, VertexSet::all(g.order())));
    const auto n = static_cast<std::size_t>(g.order());
    if (mat_rank(w) != n) throw InputError("canonical_order: graph is not controllable");
    Permutation order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(w.row(i));
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return rows[static_cast<std::size_t>(a)] < rows[static_cast<std::size_t>(b)];
    });
    return order;
}

Matrix canonical_walk_matrix(const Graph& g) {
    const Permutation order = canonical_order(g);
    const Matrix w = walk_matrix(PairSpec::from_subset(g, VertexSet::all(g.order())));
    Matrix out(w.rows(), w.cols());
    for (std::size_t k = 0; k < order.size(); ++k)
        for (std::size_t j = 0; j < w.cols(); ++j) out(k, j) = w(static_cast<std::size_t>(order[k]), j);
    return out;
}

std::vector<std::pair<Vertex, Vertex>> cospectral_vertices(const Graph& g) {
    std::vector<IntPoly> deleted;
    for (Vertex u = 0; u < g.order(); ++u) deleted.push_back(char_poly(adjacency(g.without_vertex(u))));
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex w = u + 1; w < g.order(); ++w)
            if (deleted[static_cast<std::size_t>(u)] == deleted[static_cast<std::size_t>(w)]) out.emplace_back(u, w);
    return out;
}

ModuleOrthogonality module_orthogonality_check(const Graph& g, Vertex u, Vertex w) {
    const int v = g.order();
    if (u < 0 || w < 0 || u >= v || w >= v || u == w) throw InputError("module_orthogonality_check: bad vertices");
    if (!(char_poly(adjacency(g.without_vertex(u))) == char_poly(adjacency(g.without_vertex(w)))))
        throw InputError("module_orthogonality_check: vertices are not cospectral");
    const Matrix a = adjacency(g);
    const auto n = static_cast<std::size_t>(v);
    const auto uu = static_cast<std::size_t>(u), ww = static_cast<std::size_t>(w);
    Vector plus(n, Rational(0)), minus(n, Rational(0)), eu(n, Rational(0)), ew(n, Rational(0));
    plus[uu] = plus[ww] = minus[uu] = eu[uu] = ew[ww] = 1;
    minus[ww] = -1;
    const Matrix kp = krylov_matrix(a, plus, n);
    const Matrix km = krylov_matrix(a, minus, n);

    ModuleOrthogonality r;
    r.orthogonal = true;
    for (std::size_t i = 0; i < n && r.orthogonal; ++i)
        for (std::size_t j = 0; j < n && r.orthogonal; ++j)
            r.orthogonal = sgn(dot(kp.column(i), km.column(j))) == 0;
    r.symmetric_entries = true;
    for (std::size_t i = 0; i < n; ++i) r.symmetric_entries = r.symmetric_entries && kp(uu, i) == kp(ww, i);

    const Matrix ku = krylov_matrix(a, eu, n);
    const Matrix kw = krylov_matrix(a, ew, n);
    std::vector<Vector> both;
    for (std::size_t i = 0; i < n; ++i) {
        both.push_back(ku.column(i));
        both.push_back(kw.column(i));
    }
    r.full_module = mat_rank(Matrix::from_columns(both)) == n;
    if (r.full_module) r.direct_sum = mat_rank(kp) + mat_rank(km) == n;
    return r;
}

bool johnson_newman_check(const Graph& g1, const Graph& g2) {
    require_same_order(g1.order(), g2.order());
    if (!(char_poly(adjacency(g1)) == char_poly(adjacency(g2))))
        throw InputError("johnson_newman_check: graphs are not cospectral");
    const int v = g1.order();
    const bool gf_equal = numerator_poly(PairSpec::from_subset(g1, VertexSet::all(v))) ==
                          numerator_poly(PairSpec::from_subset(g2, VertexSet::all(v)));
    const bool complements = char_poly(adjacency(complement(g1))) == char_poly(adjacency(complement(g2)));
    if (gf_equal != complements)
        throw ConsistencyError("walk generating function criterion disagrees with complement cospectrality");
    return gf_equal;
}

} // namespace walkctl
