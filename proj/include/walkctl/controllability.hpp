#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "walkctl/exact.hpp"
#include "walkctl/graph.hpp"

namespace walkctl {

/// A graph together with a vector y in Q^v. Pairs built from a vertex subset
/// remember the subset; subset-only predicates (covering radius, the coprime
/// test) require it.
class PairSpec {
public:
    static PairSpec from_subset(Graph g, VertexSet s);
    static PairSpec from_vector(Graph g, Vector y);

    const Graph& graph() const { return graph_; }
    const Vector& vector() const { return vector_; }
    const std::optional<VertexSet>& subset() const { return subset_; }
    int order() const { return graph_.order(); }
    bool is_zero() const;
    bool is_integral() const;

private:
    PairSpec(Graph g, Vector y, std::optional<VertexSet> s);
    Graph graph_;
    Vector vector_;
    std::optional<VertexSet> subset_;
};

/// Columns x, Mx, ..., M^(cols-1)x.
Matrix krylov_matrix(const Matrix& m, const Vector& x, std::size_t cols);

/// Walk matrix W = (z Az ... A^(v-1)z).
Matrix walk_matrix(const PairSpec& p);

/// y^T adj(tI - m) x, by interpolation at integer points above the
/// Gershgorin bound of m (v+1, v+2, ... for adjacency matrices).
RatPoly resolvent_form(const Matrix& m, const Vector& x, const Vector& y);

bool is_controllable_rank(const PairSpec& p);

/// phi_S(X,t) = z^T adj(tI - A) z. Throws InputError for non-integral vectors
/// (use numerator_form for those).
IntPoly numerator_poly(const PairSpec& p);
RatPoly numerator_form(const PairSpec& p);

/// True iff z^T (tI - A)^{-1} z has v distinct poles.
bool is_controllable_poles(const PairSpec& p);

/// gcd(phi(X \ u), phi(X)) is constant. Throws InputError if u is out of range.
bool is_vertex_controllable(const Graph& g, Vertex u);

struct SupportInfo {
    std::size_t support_size;
    long dual_degree;
};

SupportInfo support_and_dual_degree(const PairSpec& p);

inline constexpr int kDefaultAlgebraBound = 7;

/// Rank test on the v^2 matrices A^i z z^T A^j, flattened.
bool algebra_basis_check(const PairSpec& p, int bound = kDefaultAlgebraBound);

struct CharacterizationVerdicts {
    bool rank = false;
    bool poles = false;
    std::optional<bool> coprime; // singletons only
};

enum class RadiusKind { not_applicable, finite, infinite };

struct ControllabilityReport {
    int order = 0;
    std::size_t rank_of_w = 0;
    std::size_t support_size = 0;
    long dual_degree = -1;
    RadiusKind radius_kind = RadiusKind::not_applicable;
    int covering_radius = 0; // meaningful when radius_kind == finite
    std::optional<bool> radius_bound_holds; // covering radius <= dual degree
    bool controllable = false;
    bool degenerate = false; // zero vector
    CharacterizationVerdicts verdicts;
    IntPoly char_poly;
    RatPoly numerator;
};

/// Runs every applicable characterisation and cross-checks them.
/// Throws ConsistencyError on disagreement.
ControllabilityReport full_report(const PairSpec& p);

/// (phi(cone), t·phi(X) - phi_S(X)); throws ConsistencyError if they differ.
std::pair<IntPoly, IntPoly> cone_charpoly_identity(const Graph& g, const VertexSet& s);

/// Controllability of (cone, {apex}); throws ConsistencyError if it differs
/// from that of (X, S).
bool cone_transfer_check(const Graph& g, const VertexSet& s);

inline constexpr int kDefaultIrreducibleBound = 10;

bool is_charpoly_irreducible(const Graph& g, int bound = kDefaultIrreducibleBound);

/// Distinct eigenvalues of A(X): degree of phi / gcd(phi, phi').
std::size_t distinct_eigenvalue_count(const Graph& g);

} // namespace walkctl
