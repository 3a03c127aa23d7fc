#include <doctest.h>

#include "ethicdual/integer_duality.hpp"
#include "oracles.hpp"

using namespace ethicdual;

TEST_CASE("torsion certificate") {
    SUBCASE("identity is torsion-free") {
        auto cert = torsion_certificate(IntMatrix::identity(3));
        CHECK(cert.torsion_free);
        CHECK(cert.offending_factors.empty());
    }
    SUBCASE("[[2]] has offending factor 2") {
        auto cert = torsion_certificate(IntMatrix{{2}});
        CHECK(!cert.torsion_free);
        CHECK(cert.offending_factors == IntVec{2});
    }
    SUBCASE("[[1,2],[3,4]] with determinant -2") {
        auto cert = torsion_certificate(IntMatrix{{1, 2}, {3, 4}});
        CHECK(!cert.torsion_free);
        CHECK(cert.offending_factors == IntVec{2});
    }
    SUBCASE("torsion-free iff every rationally solvable rhs is integrally solvable") {
        std::mt19937 rng(606);
        std::uniform_int_distribution<std::size_t> dim(1, 3);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t m = dim(rng), n = dim(rng);
            IntMatrix a = oracles::random_matrix(rng, m, n, 3);
            bool tf = torsion_certificate(a).torsion_free;
            bool saturated = true;
            IntVec b(m, 0);
            std::function<void(std::size_t)> walk = [&](std::size_t pos) {
                if (!saturated) return;
                if (pos == m) {
                    auto rsol = solve_rational(RatMatrix::from_int(a), to_rat(b));
                    if (rsol && !solve_integer(a, b)) saturated = false;
                    return;
                }
                for (long v = -4; v <= 4; ++v) {
                    b[pos] = v;
                    walk(pos + 1);
                }
                b[pos] = 0;
            };
            walk(0);
            CHECK(tf == saturated);
        }
    }
}

TEST_CASE("adjoint solve") {
    CHECK(adjoint_solve(IntMatrix{{1}}, IntVec{5}) == IntVec{-5});
    CHECK(!adjoint_solve(IntMatrix{{2}}, IntVec{1}));
    CHECK(adjoint_solve(IntMatrix::identity(2), IntVec{3, -2}) == IntVec{-3, 2});
    SUBCASE("agrees with solve_integer on the transpose") {
        std::mt19937 rng(1234);
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::uniform_int_distribution<long> val(-5, 5);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t m = dim(rng), n = dim(rng);
            IntMatrix a = oracles::random_matrix(rng, m, n, 5);
            IntVec c(n);
            for (auto& v : c) v = val(rng);
            auto lam = adjoint_solve(a, c);
            auto ref = solve_integer(a.transpose(), negate(c));
            CHECK(lam.has_value() == ref.has_value());
            if (lam) CHECK(a.transpose() * *lam == negate(c));
        }
    }
}

TEST_CASE("farkas shift lattice") {
    CHECK(farkas_shift_lattice(IntMatrix(2, 1), IntVec{0, 0}).size() == 1);
    CHECK(farkas_shift_lattice(IntMatrix(2, 1), IntVec{1, 1}).size() == 4);
    CHECK(farkas_shift_lattice(IntMatrix{{2, 3}}, IntVec{7}).size() == 8);
    CHECK_THROWS_AS(farkas_shift_lattice(IntMatrix(2, 1), IntVec{2000, 2000}, 1000),
                    std::runtime_error);
    CHECK_THROWS_AS(farkas_shift_lattice(IntMatrix{{-1}}, IntVec{1}), std::invalid_argument);
}

TEST_CASE("discrete Farkas fixed instances") {
    SUBCASE("2x + 3y = 7") {
        auto out = discrete_farkas(IntMatrix{{2, 3}}, IntVec{7});
        REQUIRE(out.feasible);
        REQUIRE(out.witness);
        CHECK(IntMatrix{{2, 3}} * *out.witness == IntVec{7});
    }
    SUBCASE("2x + 4y = 5 parity separator") {
        auto out = discrete_farkas(IntMatrix{{2, 4}}, IntVec{5});
        CHECK(!out.feasible);
        CHECK(out.separator);
    }
    SUBCASE("identity takes witness b") {
        auto out = discrete_farkas(IntMatrix::identity(3), IntVec{1, 4, 2});
        REQUIRE(out.feasible);
        CHECK(*out.witness == IntVec{1, 4, 2});
    }
    SUBCASE("b = 0 is feasible with witness 0") {
        auto out = discrete_farkas(IntMatrix{{1, 2}}, IntVec{0});
        REQUIRE(out.feasible);
        CHECK(*out.witness == IntVec{0, 0});
    }
}

TEST_CASE("brute force feasibility oracle") {
    CHECK(brute_force_feasibility(IntMatrix{{2, 3}}, IntVec{7}) == IntVec{2, 1});
    CHECK(brute_force_feasibility(IntMatrix{{1, 1}}, IntVec{0}) == IntVec{0, 0});
    CHECK(brute_force_feasibility(IntMatrix{{1, 1}}, IntVec{2}) == IntVec{0, 2});
    CHECK(!brute_force_feasibility(IntMatrix{{2, 4}}, IntVec{5}));
}

TEST_CASE("discrete Farkas agrees with brute force on random instances") {
    std::mt19937 rng(90210);
    std::uniform_int_distribution<long> aval(0, 5);
    std::uniform_int_distribution<long> bval(0, 15);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix a(2, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = aval(rng);
        IntVec b{bval(rng), bval(rng)};
        auto out = discrete_farkas(a, b);
        auto oracle = brute_force_feasibility(a, b);
        CHECK(out.feasible == oracle.has_value());
        if (out.feasible) {
            REQUIRE(out.witness);
            CHECK(a * *out.witness == b);
            for (const Int& v : *out.witness) CHECK(v >= 0);
        } else {
            CHECK(out.separator);
        }
    }
}
