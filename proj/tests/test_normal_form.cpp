#include <doctest.h>

#include "ethicdual/normal_form.hpp"
#include "oracles.hpp"

using namespace ethicdual;

TEST_CASE("smith normal form on fixed matrices") {
    SUBCASE("identity 3x3") {
        auto d = smith_normal_form(IntMatrix::identity(3));
        CHECK(d.invariant_factors == IntVec{1, 1, 1});
        CHECK(d.verify(IntMatrix::identity(3)));
    }
    SUBCASE("diag(2,3) has factors 1, 6") {
        IntMatrix a{{2, 0}, {0, 3}};
        auto d = smith_normal_form(a);
        CHECK(d.invariant_factors == IntVec{1, 6});
        CHECK(d.verify(a));
    }
    SUBCASE("[[2,4],[6,8]] has factors 2, 4") {
        IntMatrix a{{2, 4}, {6, 8}};
        auto d = smith_normal_form(a);
        CHECK(d.invariant_factors == IntVec{2, 4});
        CHECK(d.verify(a));
    }
    SUBCASE("zero matrix") {
        IntMatrix a(2, 3);
        auto d = smith_normal_form(a);
        CHECK(d.invariant_factors.empty());
        CHECK(d.verify(a));
    }
    SUBCASE("rank-deficient keeps trailing zeros on the diagonal") {
        IntMatrix a{{1, 2}, {2, 4}};
        auto d = smith_normal_form(a);
        CHECK(d.invariant_factors == IntVec{1});
        CHECK(d.S(1, 1) == 0);
        CHECK(d.verify(a));
    }
}

TEST_CASE("determinantal divisors") {
    CHECK(determinantal_divisors(IntMatrix::identity(2)) == IntVec{1, 1});
    CHECK(determinantal_divisors(IntMatrix{{2, 4}, {6, 8}}) == IntVec{2, 8});
    CHECK(determinantal_divisors(IntMatrix(2, 2)) == IntVec{0, 0});
    CHECK_THROWS_AS(determinantal_divisors(IntMatrix(9, 9)), std::invalid_argument);
}

TEST_CASE("invariant factors reproduce determinantal divisor quotients") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 150; ++trial) {
        IntMatrix a = oracles::random_matrix(rng, dim(rng), dim(rng), 9);
        auto d = smith_normal_form(a);
        REQUIRE(d.verify(a));
        IntVec g = determinantal_divisors(a);
        Int prev = 1;
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (k < d.invariant_factors.size()) {
                CHECK(d.invariant_factors[k] * prev == g[k]);
                prev = g[k];
            } else {
                CHECK(g[k] == 0);
            }
        }
    }
}

TEST_CASE("hermite normal form") {
    SUBCASE("identity") {
        auto h = hermite_normal_form(IntMatrix::identity(3));
        CHECK(h.H == IntMatrix::identity(3));
        CHECK(h.U == IntMatrix::identity(3));
    }
    SUBCASE("column gcd") {
        auto h = hermite_normal_form(IntMatrix{{4}, {6}});
        CHECK(h.H == IntMatrix{{2}, {0}});
        CHECK(h.U * IntMatrix{{4}, {6}} == h.H);
        CHECK(abs(h.U.determinant()) == 1);
    }
    SUBCASE("row swap") {
        auto h = hermite_normal_form(IntMatrix{{0, 1}, {1, 0}});
        CHECK(h.H == IntMatrix::identity(2));
    }
    SUBCASE("random: U A = H, U unimodular, echelon with reduced entries") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        for (int trial = 0; trial < 60; ++trial) {
            IntMatrix a = oracles::random_matrix(rng, dim(rng), dim(rng), 9);
            auto h = hermite_normal_form(a);
            CHECK(h.U * a == h.H);
            CHECK(abs(h.U.determinant()) == 1);
            // pivots positive, entries above reduced
            std::size_t prev_col = 0;
            bool first = true;
            for (std::size_t r = 0; r < h.rank; ++r) {
                std::size_t j = 0;
                while (j < h.H.cols() && h.H(r, j) == 0) ++j;
                REQUIRE(j < h.H.cols());
                CHECK(h.H(r, j) > 0);
                if (!first) CHECK(j > prev_col);
                prev_col = j;
                first = false;
                for (std::size_t i = 0; i < r; ++i) {
                    CHECK(h.H(i, j) >= 0);
                    CHECK(h.H(i, j) < h.H(r, j));
                }
            }
            for (std::size_t r = h.rank; r < h.H.rows(); ++r)
                for (std::size_t j = 0; j < h.H.cols(); ++j) CHECK(h.H(r, j) == 0);
        }
    }
}

TEST_CASE("solve_integer") {
    SUBCASE("one variable") {
        auto s = solve_integer(IntMatrix{{1}}, IntVec{5});
        REQUIRE(s);
        CHECK(s->particular == IntVec{5});
        CHECK(s->kernel.cols() == 0);
    }
    SUBCASE("parity obstruction") { CHECK(!solve_integer(IntMatrix{{2}}, IntVec{1})); }
    SUBCASE("underdetermined") {
        IntMatrix a{{1, 1}};
        auto s = solve_integer(a, IntVec{2});
        REQUIRE(s);
        CHECK(a * s->particular == IntVec{2});
        REQUIRE(s->kernel.cols() == 1);
        CHECK(is_zero(a * s->kernel.col(0)));
        CHECK(abs(s->kernel(0, 0)) == 1);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(solve_integer(IntMatrix{{1, 2}}, IntVec{1, 2}), std::invalid_argument);
    }
    SUBCASE("round-trip: A x always solvable") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::uniform_int_distribution<long> val(-6, 6);
        for (int trial = 0; trial < 80; ++trial) {
            std::size_t m = dim(rng), n = dim(rng);
            IntMatrix a = oracles::random_matrix(rng, m, n, 7);
            IntVec x(n);
            for (auto& v : x) v = val(rng);
            auto s = solve_integer(a, a * x);
            REQUIRE(s);
            CHECK(a * s->particular == a * x);
        }
    }
}

TEST_CASE("kernel_basis") {
    SUBCASE("identity has empty kernel") { CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0); }
    SUBCASE("[[1,1]]") {
        IntMatrix k = kernel_basis(IntMatrix{{1, 1}});
        REQUIRE(k.cols() == 1);
        CHECK(abs(k(0, 0)) == 1);
        CHECK(k(0, 0) + k(1, 0) == 0);
    }
    SUBCASE("[[2,4]] gives a primitive vector") {
        IntMatrix k = kernel_basis(IntMatrix{{2, 4}});
        REQUIRE(k.cols() == 1);
        CHECK(2 * k(0, 0) + 4 * k(1, 0) == 0);
        CHECK(gcd(k(0, 0), k(1, 0)) == 1);
    }
    SUBCASE("saturation: brute-force kernel vectors never extend the lattice") {
        std::mt19937 rng(5);
        std::uniform_int_distribution<std::size_t> dim(1, 3);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t m = dim(rng), n = dim(rng);
            IntMatrix a = oracles::random_matrix(rng, m, n, 4);
            IntMatrix k = kernel_basis(a);
            for (std::size_t j = 0; j < k.cols(); ++j) CHECK(is_zero(a * k.col(j)));
            // every small kernel vector must be an integer combination of
            // the basis: solve k * y = v over Z
            IntVec v(n, 0);
            std::function<void(std::size_t)> walk = [&](std::size_t pos) {
                if (pos == n) {
                    if (!is_zero(a * v) || is_zero(v)) return;
                    if (k.cols() == 0) {
                        FAIL("nonzero kernel vector but empty basis");
                        return;
                    }
                    CHECK(solve_integer(k, v).has_value());
                    return;
                }
                for (long c = -5; c <= 5; ++c) {
                    v[pos] = c;
                    walk(pos + 1);
                }
                v[pos] = 0;
            };
            if (n <= 2) walk(0);  // keep the brute force small
        }
    }
}
