#include <doctest.h>

#include "oracles.hpp"
#include "walkctl/enumerate.hpp"
#include "walkctl/errors.hpp"
#include "walkctl/laplacian_control.hpp"

using namespace walkctl;

TEST_CASE("edge matrices sum to the Laplacian") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            Matrix sum(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            for (auto [i, j] : g.edges()) sum = sum + edge_matrix(n, i, j);
            CHECK(sum == laplacian(g));
        }
    CHECK_THROWS_AS(edge_vector(3, 1, 1), InputError);
    CHECK_THROWS_AS(edge_vector(3, 0, 3), InputError);
}

TEST_CASE("edge perturbation examples") {
    const EdgePerturbation del = edge_perturbation_polys(Graph::complete(2), 0, 1, EdgeMode::remove);
    CHECK(del.direct == IntPoly{0, 0, 1});
    CHECK(del.via_formula == del.direct);
    const EdgePerturbation add = edge_perturbation_polys(Graph(2), 0, 1, EdgeMode::add);
    CHECK(add.direct == IntPoly{0, -2, 1});
    CHECK(add.via_formula == add.direct);
    CHECK_THROWS_AS(edge_perturbation_polys(Graph(2), 0, 1, EdgeMode::remove), InputError);
    CHECK_THROWS_AS(edge_perturbation_polys(Graph::complete(2), 0, 1, EdgeMode::add), InputError);
}

TEST_CASE("add then remove restores the Laplacian polynomial") {
    const Graph g = Graph::path(5);
    const IntPoly before = char_poly(laplacian(g));
    Graph h = g;
    h.add_edge(0, 4);
    const EdgePerturbation add = edge_perturbation_polys(g, 0, 4, EdgeMode::add);
    const EdgePerturbation remove = edge_perturbation_polys(h, 0, 4, EdgeMode::remove);
    CHECK(add.direct == char_poly(laplacian(h)));
    CHECK(remove.direct == before);
}

TEST_CASE("Laplacian pair examples") {
    const LaplacianPairReport k2 = laplacian_pair_report(Graph::complete(2), 0, 1);
    CHECK(k2.controllable);
    CHECK(k2.module_dimension == 1);
    CHECK(k2.bordered_rank == 2);
    for (Vertex i = 0; i < 4; ++i)
        for (Vertex j = i + 1; j < 4; ++j) CHECK_FALSE(laplacian_pair_controllable(Graph::cycle(4), i, j));
    CHECK_FALSE(laplacian_pair_controllable(Graph::path(3), 0, 2));
    CHECK_FALSE(laplacian_pair_automorphism_check(Graph::complete(2), 0, 1));
    CHECK_THROWS_AS(laplacian_pair_automorphism_check(Graph::cycle(4), 0, 1), InputError);
}

TEST_CASE("bordered rank, module dimension and pole count") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n))
            for (Vertex i = 0; i < n; ++i)
                for (Vertex j = i + 1; j < n; ++j) {
                    const LaplacianPairReport r = laplacian_pair_report(g, i, j);
                    CHECK(r.bordered_rank == r.module_dimension + 1);
                    CHECK(r.pole_count == r.module_dimension);
                    const Matrix l = laplacian(g);
                    const Vector h = edge_vector(n, i, j);
                    CHECK(oracle::gauss_rank(oracle::walk_by_powers(l, h)) == r.module_dimension);
                }
}
