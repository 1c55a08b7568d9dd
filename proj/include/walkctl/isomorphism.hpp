#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "walkctl/controllability.hpp"

namespace walkctl {

/// Isomorphism of pairs: equal characteristic polynomials and equal
/// numerator forms y^T adj(tI - A) y. Throws InputError on order mismatch.
bool pairs_isomorphic(const PairSpec& p1, const PairSpec& p2);

/// Second route for subset pairs: X and Y cospectral and their cones over S
/// and T cospectral.
bool pairs_isomorphic_via_cones(const Graph& x, const VertexSet& s, const Graph& y, const VertexSet& t);

/// Q = W_T W_S^{-1} for isomorphic controllable pairs. Verifies Q^T Q = I,
/// Q A Q^T = B and Q y = z exactly (ConsistencyError otherwise); InputError
/// when a pair is not controllable or the pairs are not isomorphic.
Matrix q_matrix(const PairSpec& p1, const PairSpec& p2);

/// For isomorphic controllable (X,S), (X,T): Q commutes with A, Q^2 = I and Q
/// is symmetric. For singletons {u}, {w} also requires Q to swap e_u and e_w.
bool q_involution_check(const Graph& g, const VertexSet& s, const VertexSet& t);

/// True iff Q e_u = e_w and Q e_w = e_u.
bool has_swap_block(const Matrix& q, Vertex u, Vertex w);

/// Vertices listed in lexicographic order of their rows of W_V (column 0
/// compared first). result[k] is the vertex placed at position k.
/// Throws InputError when (X, V) is not controllable.
Permutation canonical_order(const Graph& g);

/// W_V with rows permuted into canonical order.
Matrix canonical_walk_matrix(const Graph& g);

/// Pairs u < w with phi(X \ u) = phi(X \ w).
std::vector<std::pair<Vertex, Vertex>> cospectral_vertices(const Graph& g);

struct ModuleOrthogonality {
    bool orthogonal = false;       // (A^i(e_u+e_w))^T A^j(e_u-e_w) = 0 for all i, j < v
    bool symmetric_entries = false; // x_u = x_w for x = A^i(e_u+e_w)
    bool full_module = false;      // A-module of {e_u, e_w} is Q^v
    std::optional<bool> direct_sum; // checked when full_module
    bool ok() const { return orthogonal && symmetric_entries && direct_sum.value_or(true); }
};

/// Throws InputError when u and w are not cospectral.
ModuleOrthogonality module_orthogonality_check(const Graph& g, Vertex u, Vertex w);

/// For cospectral graphs: equality of 1^T adj(tI - A) 1, cross-checked against
/// cospectrality of the complements (ConsistencyError on disagreement).
/// Throws InputError when the graphs are not cospectral.
bool johnson_newman_check(const Graph& g1, const Graph& g2);

} // namespace walkctl
