#include <doctest.h>

#include <cmath>

#include "ethicdual/ethic.hpp"
#include "oracles.hpp"

using namespace ethicdual;

TEST_CASE("morphism chain composition") {
    MorphismChain chain({IntMatrix{{2}}, IntMatrix{{3}}});
    CHECK(chain.compose_prefix(1) == IntMatrix{{2}});
    CHECK(chain.compose_prefix(2) == IntMatrix{{6}});
    CHECK_THROWS_AS(MorphismChain({IntMatrix{{1, 2}}, IntMatrix{{1, 2}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(chain.compose_prefix(3), std::out_of_range);
}

TEST_CASE("ethic memory") {
    CHECK(ethic_memory(MorphismChain({IntMatrix::identity(2)}), 1).is_trivial());
    CHECK(ethic_memory(MorphismChain({IntMatrix{{2}}}), 1) == FgAbelianGroup{0, IntVec{2}});
    CHECK(ethic_memory(MorphismChain({IntMatrix{{2}}, IntMatrix{{3}}}), 2) ==
          FgAbelianGroup{0, IntVec{6}});

    SUBCASE("depends only on the product, not the factorization") {
        std::mt19937 rng(55);
        for (int trial = 0; trial < 30; ++trial) {
            IntMatrix a = oracles::random_matrix(rng, 3, 3, 4);
            IntMatrix b = oracles::random_matrix(rng, 3, 3, 4);
            MorphismChain two({a, b});
            MorphismChain one({b * a});
            CHECK(ethic_memory(two, 2) == ethic_memory(one, 1));
        }
    }
}

TEST_CASE("entropy profile") {
    SUBCASE("identity chain is silent") {
        auto rep = ethic_entropy_profile(MorphismChain({IntMatrix::identity(2),
                                                        IntMatrix::identity(2)}));
        for (const auto& e : rep.per_time) {
            CHECK(e.torsion_order == 1);
            CHECK(e.entropy == 0.0);
        }
    }
    SUBCASE("[[2]] then [[3]]") {
        auto rep = ethic_entropy_profile(MorphismChain({IntMatrix{{2}}, IntMatrix{{3}}}));
        REQUIRE(rep.per_time.size() == 2);
        CHECK(rep.per_time[0].torsion_order == 2);
        CHECK(rep.per_time[1].torsion_order == 6);
        CHECK(rep.per_time[0].entropy == doctest::Approx(std::log(2.0)));
        CHECK(rep.per_time[1].entropy == doctest::Approx(std::log(6.0)));
    }
    SUBCASE("identity step preserves memory") {
        auto rep = ethic_entropy_profile(MorphismChain({IntMatrix{{6}}, IntMatrix{{1}}}));
        CHECK(rep.per_time[0].torsion_order == 6);
        CHECK(rep.per_time[1].torsion_order == 6);
    }
}

TEST_CASE("reversibility") {
    CHECK(reversibility_check(IntMatrix::identity(3)).reversible);
    auto rep = reversibility_check(IntMatrix{{2}});
    CHECK(!rep.reversible);
    CHECK(rep.memory == FgAbelianGroup{0, IntVec{2}});
    CHECK(reversibility_check(IntMatrix{{1, 1}, {0, 1}}).reversible);
    CHECK_THROWS_AS(reversibility_check(IntMatrix{{1, 2}}), std::invalid_argument);

    SUBCASE("unimodular matrices are always reversible") {
        std::mt19937 rng(42);
        for (int trial = 0; trial < 30; ++trial)
            CHECK(reversibility_check(oracles::random_unimodular(rng, 3)).reversible);
    }
}

TEST_CASE("subadditivity") {
    SUBCASE("fixed examples") {
        auto rep = subadditivity_report(MorphismChain({IntMatrix{{2}}}),
                                        MorphismChain({IntMatrix{{3}}}));
        CHECK(rep.order1 == 2);
        CHECK(rep.order2 == 3);
        CHECK(rep.order_concat == 6);
        CHECK(rep.subadditive);

        rep = subadditivity_report(MorphismChain({IntMatrix{{2, 0}, {0, 1}}}),
                                   MorphismChain({IntMatrix{{1, 0}, {0, 3}}}));
        CHECK(rep.order1 == 2);
        CHECK(rep.order2 == 3);
        CHECK(rep.order_concat == 6);
        CHECK(rep.subadditive);
    }
    SUBCASE("identity first chain gives equality") {
        auto rep = subadditivity_report(MorphismChain({IntMatrix::identity(2)}),
                                        MorphismChain({IntMatrix{{4, 0}, {0, 1}}}));
        CHECK(rep.order1 == 1);
        CHECK(rep.order_concat == rep.order2);
        CHECK(rep.subadditive);
    }
    SUBCASE("nonsingular square steps multiply torsion orders exactly") {
        std::mt19937 rng(1812);
        int seen = 0;
        while (seen < 40) {
            IntMatrix a = oracles::random_matrix(rng, 3, 3, 5);
            IntMatrix b = oracles::random_matrix(rng, 3, 3, 5);
            if (a.determinant() == 0 || b.determinant() == 0) continue;
            ++seen;
            auto rep = subadditivity_report(MorphismChain({a}), MorphismChain({b}));
            CHECK(rep.order_concat == rep.order1 * rep.order2);
            CHECK(rep.subadditive);
        }
    }
}

TEST_CASE("decay report") {
    SUBCASE("unimodular chain never flags") {
        std::mt19937 rng(3);
        MorphismChain chain({oracles::random_unimodular(rng, 2),
                             oracles::random_unimodular(rng, 2)});
        for (const auto& e : decay_report(chain)) {
            CHECK(e.torsion_order == 1);
            CHECK(e.nonincreasing_from_previous);
        }
    }
    SUBCASE("growth is reported as data") {
        auto rep = decay_report(MorphismChain({IntMatrix{{2}}, IntMatrix{{3}}}));
        REQUIRE(rep.size() == 2);
        CHECK(rep[0].nonincreasing_from_previous);
        CHECK(!rep[1].nonincreasing_from_previous);
    }
    SUBCASE("a collapsing step is monotone") {
        // F1 = diag(6,1) has memory Z/6; composing with [[1,3]] gives
        // [[6,3]] whose SNF is [3], so the Z/2 part decays
        auto rep = decay_report(MorphismChain({IntMatrix{{6, 0}, {0, 1}}, IntMatrix{{1, 3}}}));
        REQUIRE(rep.size() == 2);
        CHECK(rep[0].torsion_order == 6);
        CHECK(rep[1].torsion_order == 3);
        CHECK(rep[1].nonincreasing_from_previous);
    }
}

TEST_CASE("entropy_of_order handles huge orders without overflow") {
    Int big = 1;
    for (int i = 0; i < 400; ++i) big *= 10;
    CHECK(entropy_of_order(big) == doctest::Approx(400 * std::log(10.0)));
    CHECK(entropy_of_order(Int(1)) == 0.0);
}
