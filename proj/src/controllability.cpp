#include "walkctl/controllability.hpp"

#include <algorithm>
#include <string>

#include "walkctl/errors.hpp"
#include "walkctl/irreducible.hpp"

namespace walkctl {

PairSpec::PairSpec(Graph g, Vector y, std::optional<VertexSet> s)
    : graph_(std::move(g)), vector_(std::move(y)), subset_(std::move(s)) {}

PairSpec PairSpec::from_subset(Graph g, VertexSet s) {
    if (s.universe() != g.order()) throw InputError("PairSpec: subset universe does not match graph order");
    Vector z = s.characteristic();
    return PairSpec(std::move(g), std::move(z), std::move(s));
}

PairSpec PairSpec::from_vector(Graph g, Vector y) {
    if (static_cast<int>(y.size()) != g.order()) throw InputError("PairSpec: vector length does not match graph order");
    return PairSpec(std::move(g), std::move(y), std::nullopt);
}

bool PairSpec::is_zero() const {
    return std::all_of(vector_.begin(), vector_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool PairSpec::is_integral() const {
    return std::all_of(vector_.begin(), vector_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Matrix krylov_matrix(const Matrix& m, const Vector& x, std::size_t cols) {
    std::vector<Vector> columns;
    columns.reserve(cols);
    Vector cur = x;
    for (std::size_t r = 0; r < cols; ++r) {
        columns.push_back(cur);
        if (r + 1 < cols) cur = m.apply(cur);
    }
    if (columns.empty()) return Matrix(x.size(), 0);
    return Matrix::from_columns(columns);
}

Matrix walk_matrix(const PairSpec& p) {
    return krylov_matrix(adjacency(p.graph()), p.vector(), static_cast<std::size_t>(p.order()));
}

RatPoly resolvent_form(const Matrix& m, const Vector& x, const Vector& y) {
    const std::size_t n = m.rows();
    Rational bound = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += abs(m(i, j));
        bound = std::max(bound, s);
    }
    // floor(bound) + 1 exceeds every eigenvalue in absolute value.
    Integer start = bound.get_num() / bound.get_den() + 1;
    start = std::max(start, Integer(static_cast<long>(n) + 1));
    return pencil_forms(Rational(-1) * m, Matrix::identity(n), x, y, start.get_si()).form;
}

bool is_controllable_rank(const PairSpec& p) {
    return mat_rank(walk_matrix(p)) == static_cast<std::size_t>(p.order());
}

RatPoly numerator_form(const PairSpec& p) {
    return resolvent_form(adjacency(p.graph()), p.vector(), p.vector());
}

IntPoly numerator_poly(const PairSpec& p) {
    if (!p.is_integral()) throw InputError("numerator_poly: vector is not integral");
    return to_int_poly(numerator_form(p));
}

namespace {

// Positive rescaling to an integral vector; poles and ranks are unchanged.
Vector integral_multiple(const Vector& y) {
    Integer l = 1;
    for (const auto& q : y) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    Vector out = y;
    for (auto& q : out) q *= l;
    return out;
}

bool poles_verdict(const IntPoly& phi, const IntPoly& numerator, int v) {
    return distinct_pole_count({numerator, phi}) == static_cast<std::size_t>(v);
}

} // namespace

bool is_controllable_poles(const PairSpec& p) {
    const IntPoly phi = char_poly(adjacency(p.graph()));
    const Vector y = integral_multiple(p.vector());
    const IntPoly num = to_int_poly(resolvent_form(adjacency(p.graph()), y, y));
    return poles_verdict(phi, num, p.order());
}

bool is_vertex_controllable(const Graph& g, Vertex u) {
    if (u < 0 || u >= g.order()) throw InputError("vertex " + std::to_string(u) + " out of range");
    const IntPoly phi = char_poly(adjacency(g));
    const IntPoly phi_u = char_poly(adjacency(g.without_vertex(u)));
    if (phi_u.is_zero()) return phi.is_constant();
    return poly_gcd(phi_u, phi).is_constant();
}

SupportInfo support_and_dual_degree(const PairSpec& p) {
    const std::size_t r = mat_rank(walk_matrix(p));
    return {r, static_cast<long>(r) - 1};
}

bool algebra_basis_check(const PairSpec& p, int bound) {
    const int v = p.order();
    if (v > bound) throw GuardError("algebra_basis_check limited to " + std::to_string(bound) + " vertices");
    const Matrix w = walk_matrix(p);
    const auto n = static_cast<std::size_t>(v);
    // Row (i,j) is the flattening of (A^i z)(A^j z)^T.
    Matrix flat(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) flat(i * n + j, a * n + b) = w(a, i) * w(b, j);
    return mat_rank(flat) == n * n;
}

ControllabilityReport full_report(const PairSpec& p) {
    ControllabilityReport rep;
    const int v = p.order();
    rep.order = v;
    const Matrix a = adjacency(p.graph());
    rep.rank_of_w = mat_rank(krylov_matrix(a, p.vector(), static_cast<std::size_t>(v)));
    rep.support_size = rep.rank_of_w;
    rep.dual_degree = static_cast<long>(rep.support_size) - 1;
    rep.degenerate = p.is_zero();

    rep.char_poly = char_poly(a);
    rep.numerator = resolvent_form(a, p.vector(), p.vector());
    const Vector y = integral_multiple(p.vector());
    const IntPoly num = p.is_integral() ? to_int_poly(rep.numerator) : to_int_poly(resolvent_form(a, y, y));

    rep.verdicts.rank = rep.rank_of_w == static_cast<std::size_t>(v);
    rep.verdicts.poles = poles_verdict(rep.char_poly, num, v);
    if (rep.verdicts.rank != rep.verdicts.poles)
        throw ConsistencyError("rank and pole characterisations disagree");

    if (const auto& s = p.subset()) {
        if (s->size() == 1) {
            rep.verdicts.coprime = is_vertex_controllable(p.graph(), s->members().front());
            if (*rep.verdicts.coprime != rep.verdicts.rank)
                throw ConsistencyError("coprime characterisation disagrees with rank");
        }
        // An empty S reaches nothing: infinite radius.
        const auto r = s->empty() ? std::nullopt : covering_radius(p.graph(), *s);
        if (r) {
            rep.radius_kind = RadiusKind::finite;
            rep.covering_radius = *r;
            rep.radius_bound_holds = *r <= rep.dual_degree;
        } else {
            rep.radius_kind = RadiusKind::infinite;
        }
    }
    rep.controllable = rep.verdicts.rank;
    return rep;
}

std::pair<IntPoly, IntPoly> cone_charpoly_identity(const Graph& g, const VertexSet& s) {
    const IntPoly direct = char_poly(adjacency(cone(g, s)));
    const IntPoly phi = char_poly(adjacency(g));
    const IntPoly via = IntPoly{0, 1} * phi - numerator_poly(PairSpec::from_subset(g, s));
    if (!(direct == via)) throw ConsistencyError("cone characteristic polynomial identity failed");
    return {direct, via};
}

bool cone_transfer_check(const Graph& g, const VertexSet& s) {
    const Graph c = cone(g, s);
    const bool apex = is_controllable_rank(PairSpec::from_subset(c, VertexSet::single(c.order(), 0)));
    const bool base = is_controllable_rank(PairSpec::from_subset(g, s));
    if (apex != base) throw ConsistencyError("cone transfer equivalence failed");
    return apex;
}

bool is_charpoly_irreducible(const Graph& g, int bound) {
    if (g.order() > bound)
        throw GuardError("irreducibility test limited to " + std::to_string(bound) + " vertices");
    return is_irreducible_over_q(char_poly(adjacency(g)));
}

std::size_t distinct_eigenvalue_count(const Graph& g) {
    if (g.order() == 0) return 0;
    return distinct_root_count(char_poly(adjacency(g)));
}

} // namespace walkctl
