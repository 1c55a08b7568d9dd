#pragma once

#include <cstddef>

#include "walkctl/controllability.hpp"

namespace walkctl {

/// h = e_i - e_j. Throws InputError if i == j or either is out of range.
Vector edge_vector(int v, Vertex i, Vertex j);

/// H_{i,j} = h h^T.
Matrix edge_matrix(int v, Vertex i, Vertex j);

enum class EdgeMode { add, remove };

struct EdgePerturbation {
    IntPoly direct;      // phi(L(Y)) for the perturbed graph Y
    IntPoly via_formula; // phi(L(X)) -/+ h^T adj(tI - L) h
};

/// Throws InputError when the mode does not match the edge's presence and
/// ConsistencyError if the two polynomials differ.
EdgePerturbation edge_perturbation_polys(const Graph& g, Vertex i, Vertex j, EdgeMode mode);

struct LaplacianPairReport {
    std::size_t module_dimension = 0; // rank of (h Lh ... L^(v-1)h)
    std::size_t bordered_rank = 0;    // rank of (1 h Lh ... L^(v-1)h)
    std::size_t pole_count = 0;       // distinct poles of h^T (tI - L)^{-1} h
    bool controllable = false;        // module_dimension == v - 1
};

LaplacianPairReport laplacian_pair_report(const Graph& g, Vertex i, Vertex j);

/// The L-module generated by e_i - e_j has dimension v - 1.
bool laplacian_pair_controllable(const Graph& g, Vertex i, Vertex j);

/// True iff no non-identity automorphism fixes {i, j} setwise. Requires the
/// pair to be Laplacian-controllable (InputError otherwise). The implication
/// holds for v >= 3; on K_2 the swap fixes {0, 1} and this returns false.
bool laplacian_pair_automorphism_check(const Graph& g, Vertex i, Vertex j,
                                       int bound = kDefaultAutomorphismBound);

} // namespace walkctl
