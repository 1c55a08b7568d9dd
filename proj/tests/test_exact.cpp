#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "walkctl/controllability.hpp"
#include "walkctl/exact.hpp"

using namespace walkctl;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = oracle::frac(d(rng), 1 + (d(rng) & 1));
    return m;
}

} // namespace

TEST_CASE("rank examples") {
    CHECK(mat_rank(Matrix::identity(3)) == 3);
    // walk matrix of P_3 from the middle vertex: e1, e0+e2, 2e1
    CHECK(mat_rank(Matrix{{0, 1, 0}, {1, 0, 2}, {0, 1, 0}}) == 2);
    // from an end vertex: e0, e1, e0+e2
    CHECK(mat_rank(Matrix{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}) == 3);
    CHECK(mat_rank(Matrix(2, 3)) == 0);
}

TEST_CASE("rank and determinant agree with the naive oracles") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 6;
        Matrix m = random_matrix(n, n, rng);
        if (trial % 3 == 0 && n > 1) // force a dependent row
            for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * 2 - m(1 % n, j);
        CHECK(determinant(m) == oracle::cofactor_det(m));
        CHECK(mat_rank(m) == oracle::gauss_rank(m));
        const Matrix r = random_matrix(n, n + 2, rng);
        CHECK(mat_rank(r) == oracle::gauss_rank(r));
    }
}

TEST_CASE("solve and inverse") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const Matrix m = random_matrix(n, n, rng);
        Vector b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = oracle::frac(static_cast<long>(i) - 2, 3);
        const auto x = solve(m, b);
        if (determinant(m) == 0) {
            CHECK_FALSE(x.has_value());
            CHECK_THROWS_AS(inverse(m), std::domain_error);
        } else {
            REQUIRE(x.has_value());
            CHECK(m.apply(*x) == b);
            CHECK(m * inverse(m) == Matrix::identity(n));
        }
    }
}

TEST_CASE("characteristic polynomial examples") {
    CHECK(char_poly(Matrix{{0}}) == IntPoly{0, 1});
    CHECK(char_poly(Matrix{{0, 1}, {1, 0}}) == IntPoly{-1, 0, 1});
    CHECK(char_poly(Matrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}) == IntPoly{0, -2, 0, 1});
    CHECK_THROWS(char_poly(Matrix{{0, 1, 2}}));
}

TEST_CASE("characteristic polynomial matches Faddeev-LeVerrier") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 7;
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
        CHECK(oracle::as_rat(char_poly(m)) == oracle::leverrier(m));
    }
}

TEST_CASE("polynomial gcd") {
    const IntPoly p3{0, -2, 0, 1};
    const IntPoly p2{-1, 0, 1};
    CHECK(poly_gcd(p3, p2) == IntPoly{1});
    CHECK(poly_gcd(IntPoly{-4, 0, 2}, IntPoly{-4, 0, 2}) == IntPoly{-2, 0, 1});
    CHECK(poly_gcd(IntPoly{2, 0, -2}, IntPoly{0}) == IntPoly{-1, 0, 1});
    CHECK(poly_gcd(p2, IntPoly{-1, 1}) == IntPoly{-1, 1});
    CHECK_THROWS(poly_gcd(IntPoly{}, IntPoly{}));
}

TEST_CASE("gcd of products recovers the common factor") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-5, 5);
    auto random_poly = [&](int deg) {
        std::vector<Integer> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
        if (c.back() == 0) c.back() = 1;
        return IntPoly(c);
    };
    for (int trial = 0; trial < 100; ++trial) {
        const IntPoly g = random_poly(1 + trial % 3).primitive_part();
        const IntPoly a = random_poly(1 + trial % 4);
        const IntPoly b = random_poly(2);
        const IntPoly h = poly_gcd(g * a, g * b);
        CHECK(exact_divide(h, g).has_value()); // g | gcd
        CHECK(exact_divide(g * a, h).has_value());
        CHECK(exact_divide(g * b, h).has_value());
        CHECK(h.lead() > 0);
        CHECK(h.content() == 1);
    }
}

TEST_CASE("distinct roots") {
    CHECK(poly_squarefree(IntPoly{-1, 0, 1}));
    CHECK_FALSE(poly_squarefree(IntPoly{1, -2, 1}));
    CHECK_FALSE(poly_squarefree(IntPoly{0, 0, -4, 0, 1})); // phi(C_4)
    CHECK(distinct_root_count(IntPoly{0, 0, -4, 0, 1}) == 3);
    CHECK(distinct_root_count(IntPoly{1, -2, 1}) == 1);
    CHECK_THROWS(poly_squarefree(IntPoly{}));
}

TEST_CASE("rational function normalisation and poles") {
    const RationalFunction a{IntPoly{-1, 0, 1}, IntPoly{0, -2, 0, 1}};
    CHECK(rf_normalize(a) == a);
    CHECK(distinct_pole_count(a) == 3);
    const RationalFunction b{IntPoly{-1, 1}, IntPoly{-1, 0, 1}};
    CHECK(rf_normalize(b) == RationalFunction{IntPoly{1}, IntPoly{1, 1}});
    const RationalFunction z{IntPoly{}, IntPoly{0, -2, 0, 1}};
    CHECK(rf_normalize(z) == RationalFunction{IntPoly{}, IntPoly{1}});
    CHECK(distinct_pole_count(RationalFunction{IntPoly{1}, IntPoly{1, -2, 1}}) == 1);
    // phi_S / phi for one vertex of C_4
    const PairSpec c4 = PairSpec::from_subset(Graph::cycle(4), VertexSet::single(4, 0));
    CHECK(distinct_pole_count(RationalFunction{numerator_poly(c4), char_poly(adjacency(Graph::cycle(4)))}) < 4);
}

TEST_CASE("interpolation round trip") {
    const IntPoly f{3, 0, -1, 2};
    std::vector<Integer> xs;
    std::vector<Rational> ys;
    for (long x = -2; x <= 1; ++x) {
        xs.emplace_back(x);
        ys.emplace_back(f.eval(Integer(x)));
    }
    CHECK(to_int_poly(interpolate(xs, ys)) == f);
    CHECK_THROWS_AS(to_int_poly(RatPoly{Rational(1, 2)}), std::domain_error);
}

TEST_CASE("pencil forms match the symbolic adjugate") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 5;
        Matrix a(n, n);
        Vector x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = d(rng);
            y[i] = oracle::frac(d(rng), 2);
            for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
        }
        // P(t) = tI - A
        const PencilForms f = pencil_forms(Rational(-1) * a, Matrix::identity(n), x, y, 0);
        CHECK(f.det == oracle::leverrier(a));
        CHECK(f.form == oracle::cofactor_form(a, x, y));
    }
}

TEST_CASE("polynomial helpers") {
    const IntPoly f{1, 2, 3};
    CHECK(f.reversed(2) == IntPoly{3, 2, 1});
    CHECK(f.reversed(3) == IntPoly{0, 3, 2, 1});
    CHECK(f.derivative() == IntPoly{2, 6});
    CHECK(IntPoly{4, 6}.primitive_part() == IntPoly{2, 3});
    CHECK(IntPoly{-4, -6}.primitive_part() == IntPoly{2, 3});
    CHECK(f.eval(Rational(1, 2)) == Rational(11, 4));
    CHECK(IntPoly{}.degree() == -1);
    CHECK(pseudo_remainder(IntPoly{0, 0, 1}, IntPoly{-1, 2}) == IntPoly{1});
    CHECK(IntPoly{-1, 0, 1}.to_string() == "t^2 - 1");
}
