#include <doctest.h>

#include <random>

#include "lbt/tau.hpp"
#include "support/fixtures.hpp"
#include "support/random_inputs.hpp"

using namespace lbt;

TEST_CASE("beta maps on the intercalate") {
    Bitrade b = fixtures::intercalate();
    // star entries row-major: (0,0,1) (0,1,0) (1,0,0) (1,1,1)
    // circ entries row-major: (0,0,0) (0,1,1) (1,0,1) (1,1,0)
    auto b3 = compute_beta(b, 3); // symbol changes, cell kept
    CHECK(b3 == std::vector<uint32_t>{0, 1, 2, 3});
    auto b1 = compute_beta(b, 1); // row changes
    CHECK(b1 == std::vector<uint32_t>{2, 3, 0, 1});
    auto b2 = compute_beta(b, 2); // column changes
    CHECK(b2 == std::vector<uint32_t>{1, 0, 3, 2});
}

TEST_CASE("beta maps on the 3x4 example") {
    Bitrade b = fixtures::example1();
    // (a,d,h) is the first star entry; its symbol partner is (a,d,g), the
    // first circ entry, and its row partner is (b,d,h), circ entry index 3
    auto b3 = compute_beta(b, 3);
    CHECK(b3[0] == 0);
    auto b1 = compute_beta(b, 1);
    CHECK(b1[0] == 3);
}

TEST_CASE("beta rejects non-bitrades with a witness") {
    PartialLatinSquare circ(2, 2, 3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    PartialLatinSquare star(2, 2, 3, {{0, 0, 1}, {0, 1, 2}, {1, 0, 0}, {1, 1, 2}});
    CHECK_THROWS_WITH_AS(compute_beta(Bitrade(circ, star), 1),
                         doctest::Contains("has 0 partners"), std::invalid_argument);
}

TEST_CASE("tau permutations of the worked examples") {
    SUBCASE("intercalate") {
        auto tau = compute_tau(fixtures::intercalate());
        CHECK(tau.tau1 == Permutation::from_cycles("(0,1)(2,3)", 4));
        CHECK(tau.tau2 == Permutation::from_cycles("(0,2)(1,3)", 4));
        CHECK(tau.tau3 == Permutation::from_cycles("(0,3)(1,2)", 4));
    }
    SUBCASE("cyclic pair reproduces the printed cycles") {
        auto tau = compute_tau(fixtures::cyclic3_pair());
        CHECK(tau.tau1.cycle_string() == "(0,2,1)(3,5,4)(6,8,7)");
        CHECK(tau.tau2.cycle_string() == "(0,3,6)(1,4,7)(2,5,8)");
        CHECK((tau.tau1 * tau.tau2 * tau.tau3).is_identity());
    }
    SUBCASE("the 5x5 square trade's first rows") {
        auto tau = compute_tau(fixtures::remark_trade());
        // entries 0..4 are the first row, 5..9 the second; one 5-cycle, then
        // a 3-cycle and a 2-cycle
        auto cycles = tau.cycles1;
        REQUIRE(cycles.size() >= 3);
        CHECK(cycles[0] == std::vector<uint32_t>{0, 1, 2, 3, 4});
        CHECK(cycles[1] == std::vector<uint32_t>{5, 8, 9});
        CHECK(cycles[2] == std::vector<uint32_t>{6, 7});
    }
}

TEST_CASE("tau requires a nonempty bitrade over fully used labels") {
    PartialLatinSquare empty(2, 2, 2, {});
    CHECK_THROWS_AS(compute_tau(Bitrade(empty, empty)), std::invalid_argument);

    // declare a third symbol that never occurs
    Bitrade inter = fixtures::intercalate();
    std::vector<Triple> circ(inter.circ().entries());
    std::vector<Triple> star(inter.star().entries());
    Bitrade padded(PartialLatinSquare(2, 2, 3, circ), PartialLatinSquare(2, 2, 3, star));
    CHECK_THROWS_AS(compute_tau(padded), std::invalid_argument);
}

TEST_CASE("representation axioms hold for every valid bitrade") {
    for (const Bitrade& b :
         {fixtures::intercalate(), fixtures::example1(), fixtures::example2(),
          fixtures::cyclic3_pair(), fixtures::remark_trade(),
          fixtures::twin_intercalates(), fixtures::s3_triad()}) {
        auto report = check_tau_axioms(compute_tau(b));
        CHECK(report.ok());
    }
}

TEST_CASE("axiom checks report witnesses on synthetic failures") {
    SUBCASE("identity has fixed points") {
        auto rep = TauRepresentation::from_permutations(
            Permutation::identity(1), Permutation::identity(1), Permutation::identity(1));
        auto report = check_tau_axioms(rep);
        CHECK(report.product_is_identity());
        CHECK_FALSE(report.fixed_point_free());
        CHECK(report.fixed_point->rep == 1);
    }
    SUBCASE("transposition pair fails only on the third map") {
        auto rep = TauRepresentation::from_permutations(
            Permutation::from_cycles("(0,1)", 2), Permutation::from_cycles("(0,1)", 2),
            Permutation::identity(2));
        auto report = check_tau_axioms(rep);
        CHECK(report.product_is_identity());
        CHECK_FALSE(report.fixed_point_free());
        CHECK(report.fixed_point->rep == 3);
    }
    SUBCASE("overlapping cycles are caught") {
        auto rep = TauRepresentation::from_permutations(
            Permutation::from_cycles("(0,1,2)", 3), Permutation::from_cycles("(0,2,1)", 3),
            Permutation::identity(3));
        auto report = check_tau_axioms(rep);
        CHECK_FALSE(report.overlap_ok());
        CHECK(report.overlap_failure->shared.size() == 3);
    }
}

TEST_CASE("separatedness") {
    CHECK(is_separated(fixtures::intercalate()).separated);
    CHECK(is_separated(fixtures::example1()).separated);
    CHECK(is_separated(fixtures::example2()).separated);
    CHECK(is_separated(fixtures::cyclic3_pair()).separated);
    CHECK(is_separated(fixtures::s3_triad()).separated);
    CHECK_FALSE(is_separated(fixtures::remark_trade()).separated);

    SUBCASE("per-label counts and totals") {
        auto report = is_separated(fixtures::example1());
        CHECK(report.cycle_totals == std::array<uint32_t, 3>{3, 3, 4});
        CHECK(report.row_cycles == std::vector<uint32_t>(3, 1));
        CHECK(report.sym_cycles == std::vector<uint32_t>(4, 1));
        CHECK_FALSE(report.single_cycle_each);
    }
    SUBCASE("the square trade has a row with two cycles") {
        auto report = is_separated(fixtures::remark_trade());
        CHECK(report.row_cycles[0] == 1);
        CHECK(report.row_cycles[1] == 2);
    }
    SUBCASE("a disjoint union is separated without being connected") {
        auto report = is_separated(fixtures::twin_intercalates());
        CHECK(report.separated);
        auto orbits = entry_orbits(compute_tau(fixtures::twin_intercalates()));
        CHECK(orbits.size() == 2);
    }
}

TEST_CASE("beta maps are bijections both ways") {
    std::mt19937_64 rng(77);
    auto groups = lbt::catalog::all_groups_up_to(12);
    for (int trial = 0; trial < 25; ++trial) {
        Bitrade b = random_inputs::random_bitrade(groups, rng);
        for (int r = 1; r <= 3; ++r) {
            auto beta = compute_beta(b, r);
            std::vector<bool> hit(beta.size(), false);
            for (uint32_t image : beta) {
                CHECK_FALSE(hit[image]);
                hit[image] = true;
            }
        }
    }
}

TEST_CASE("separated bitrades have one cycle per occupied label") {
    std::mt19937_64 rng(31);
    auto groups = lbt::catalog::all_groups_up_to(12);
    for (int trial = 0; trial < 25; ++trial) {
        Bitrade b = random_inputs::random_bitrade(groups, rng);
        auto report = is_separated(b);
        // coset constructions are always separated; their cycle totals count
        // the occupied labels
        REQUIRE(report.separated);
        CHECK(report.cycle_totals[0] == b.circ().n_rows());
        CHECK(report.cycle_totals[1] == b.circ().n_cols());
        CHECK(report.cycle_totals[2] == b.circ().n_syms());
    }
}

TEST_CASE("genus of the worked examples") {
    CHECK(genus(fixtures::intercalate()).genus == 0);
    CHECK(genus(fixtures::example1()).genus == 0);
    CHECK(genus(fixtures::cyclic3_pair()).genus == 1);
    CHECK(genus(fixtures::example2()).genus == 1);

    SUBCASE("refusals") {
        auto disconnected = genus(fixtures::twin_intercalates());
        CHECK(disconnected.status == GenusResult::Status::disconnected);
        CHECK(disconnected.orbit_genera == std::vector<int64_t>{0, 0});

        auto tangled = genus(fixtures::remark_trade());
        CHECK(tangled.status == GenusResult::Status::not_separated);
    }
}

TEST_CASE("genus is an isotopy invariant") {
    std::mt19937_64 rng(47);
    for (const Bitrade& b : {fixtures::example1(), fixtures::cyclic3_pair(),
                             fixtures::s3_triad(), fixtures::example2()}) {
        auto base = genus(b);
        for (int trial = 0; trial < 10; ++trial) {
            Bitrade moved =
                apply_isotopism(b, random_inputs::random_isotopism(b.circ(), rng));
            auto g = genus(moved);
            CHECK(g.status == base.status);
            CHECK(g.genus == base.genus);
        }
    }
}
