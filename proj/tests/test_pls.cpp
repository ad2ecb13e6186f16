#include <doctest.h>

#include <random>
#include <set>

#include "lbt/pls.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_inputs.hpp"

using namespace lbt;

TEST_CASE("square validation") {
    SUBCASE("empty entry set is fine") {
        PartialLatinSquare p(2, 2, 2, {});
        CHECK(validate_pls(p).ok());
    }
    SUBCASE("a group table is fine") {
        PartialLatinSquare p(2, 2, 2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
        CHECK(validate_pls(p).ok());
    }
    SUBCASE("repeated symbol in a row") {
        PartialLatinSquare p(2, 2, 2, {{0, 0, 0}, {0, 1, 0}});
        auto report = validate_pls(p);
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].kind == PlsViolation::Kind::repeated_row_sym);
    }
    SUBCASE("out-of-range entries are reported, not thrown") {
        PartialLatinSquare p(2, 2, 2, {{0, 0, 5}});
        auto report = validate_pls(p);
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].kind == PlsViolation::Kind::out_of_range);
    }
    SUBCASE("two symbols in one cell") {
        PartialLatinSquare p(2, 2, 3, {{0, 0, 0}, {0, 0, 1}});
        auto report = validate_pls(p);
        CHECK_FALSE(report.ok());
        bool cell = false;
        for (const auto& v : report.violations)
            if (v.kind == PlsViolation::Kind::repeated_cell) cell = true;
        CHECK(cell);
    }
    SUBCASE("zero-size label sets are rejected at construction") {
        CHECK_THROWS_AS(PartialLatinSquare(0, 1, 1, {}), std::invalid_argument);
    }
}

TEST_CASE("bitrade validation accepts the worked examples") {
    CHECK(validate_bitrade(fixtures::intercalate()).ok());
    CHECK(validate_bitrade(fixtures::example1()).ok());
    CHECK(validate_bitrade(fixtures::example2()).ok());
    CHECK(fixtures::example2().size() == 15);
    CHECK(validate_bitrade(fixtures::cyclic3_pair()).ok());
    CHECK(validate_bitrade(fixtures::remark_trade()).ok());
    CHECK(validate_bitrade(fixtures::twin_intercalates()).ok());
    CHECK(validate_bitrade(fixtures::s3_triad()).ok());
}

TEST_CASE("bitrade validation pinpoints failures") {
    SUBCASE("overlapping sides") {
        PartialLatinSquare t(2, 2, 2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
        Bitrade b(t, t);
        auto report = validate_bitrade(b);
        CHECK_FALSE(report.ok());
        CHECK(report.overlap.size() == 4);
    }
    SUBCASE("missing partner") {
        PartialLatinSquare circ(2, 2, 3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
        PartialLatinSquare star(2, 2, 3, {{0, 0, 1}, {0, 1, 2}, {1, 0, 0}, {1, 1, 2}});
        auto report = validate_bitrade(Bitrade(circ, star));
        CHECK_FALSE(report.ok());
        CHECK_FALSE(report.partner_failures.empty());
        // symbol 2 never occurs on the circ side, so those star entries have
        // no row-symbol partner
        bool witnessed = false;
        for (const auto& f : report.partner_failures)
            if (f.from_side == 1 && f.entry.sym == 2 && f.partner_count == 0)
                witnessed = true;
        CHECK(witnessed);
    }
    SUBCASE("sides of different shape are rejected at construction") {
        PartialLatinSquare a(2, 2, 2, {});
        PartialLatinSquare b(2, 3, 2, {});
        CHECK_THROWS_AS(Bitrade(a, b), std::invalid_argument);
    }
}

TEST_CASE("valid bitrades share cells and row/column symbol sets") {
    auto groups = lbt::catalog::all_groups_up_to(12);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Bitrade b = random_inputs::random_bitrade(groups, rng);
        REQUIRE(validate_bitrade(b).ok());
        CHECK(b.circ().size() == b.star().size());
        std::set<std::pair<uint32_t, uint32_t>> cells_circ, cells_star;
        std::map<uint32_t, std::set<uint32_t>> row_syms_circ, row_syms_star;
        std::map<uint32_t, std::set<uint32_t>> col_syms_circ, col_syms_star;
        for (const auto& t : b.circ().entries()) {
            cells_circ.insert({t.row, t.col});
            row_syms_circ[t.row].insert(t.sym);
            col_syms_circ[t.col].insert(t.sym);
        }
        for (const auto& t : b.star().entries()) {
            cells_star.insert({t.row, t.col});
            row_syms_star[t.row].insert(t.sym);
            col_syms_star[t.col].insert(t.sym);
        }
        CHECK(cells_circ == cells_star);
        CHECK(row_syms_circ == row_syms_star);
        CHECK(col_syms_circ == col_syms_star);
    }
}

TEST_CASE("isotopism application") {
    Bitrade inter = fixtures::intercalate();
    SUBCASE("identity is neutral") {
        Isotopism id = Isotopism::identity(2, 2, 2);
        CHECK(apply_isotopism(inter.circ(), id) == inter.circ());
    }
    SUBCASE("the symbol swap carries one side to the other") {
        Isotopism g{Permutation::identity(2), Permutation::identity(2),
                    Permutation::from_cycles("(0,1)", 2)};
        CHECK(apply_isotopism(inter.circ(), g) == inter.star());
    }
    SUBCASE("the known stabilizing triple fixes both example sides") {
        Bitrade b = fixtures::example1();
        Isotopism alpha{Permutation::from_cycles("(0,1)", 3),
                        Permutation::from_cycles("(0,2)", 3),
                        Permutation::from_cycles("(0,3)(1,2)", 4)};
        CHECK(apply_isotopism(b.circ(), alpha) == b.circ());
        CHECK(apply_isotopism(b.star(), alpha) == b.star());
    }
    SUBCASE("degree mismatch throws") {
        CHECK_THROWS_AS(apply_isotopism(inter.circ(), Isotopism::identity(3, 2, 2)),
                        std::invalid_argument);
    }
    SUBCASE("application is a group action and preserves validity") {
        std::mt19937_64 rng(5);
        Bitrade b = fixtures::example1();
        for (int trial = 0; trial < 25; ++trial) {
            Isotopism g = random_inputs::random_isotopism(b.circ(), rng);
            Isotopism h = random_inputs::random_isotopism(b.circ(), rng);
            PartialLatinSquare moved = apply_isotopism(b.circ(), g);
            CHECK(validate_pls(moved).ok());
            CHECK(apply_isotopism(moved, h) == apply_isotopism(b.circ(), g * h));
            CHECK(apply_isotopism(moved, g.inverse()) == b.circ());
        }
    }
}

TEST_CASE("isotopy search") {
    Bitrade inter = fixtures::intercalate();
    SUBCASE("a square is isotopic to itself by the identity") {
        auto result = are_isotopic(inter.circ(), inter.circ());
        REQUIRE(result.outcome == SearchOutcome::found);
        CHECK(result.witness->is_identity());
    }
    SUBCASE("intercalate sides differ by the symbol swap, the least witness") {
        auto result = are_isotopic(inter.circ(), inter.star());
        REQUIRE(result.outcome == SearchOutcome::found);
        CHECK(result.witness->rows.is_identity());
        CHECK(result.witness->cols.is_identity());
        CHECK(result.witness->syms == Permutation::from_cycles("(0,1)", 2));
    }
    SUBCASE("agreement with the exhaustive scan on the 3x4 example") {
        Bitrade b = fixtures::example1();
        auto expected = oracles::isotopisms_between(b.circ(), b.star());
        auto result = are_isotopic(b.circ(), b.star());
        CHECK((result.outcome == SearchOutcome::found) == !expected.empty());
        if (result.witness)
            CHECK(apply_isotopism(b.circ(), *result.witness) == b.star());
    }
    SUBCASE("a witness inverts to a witness") {
        std::mt19937_64 rng(11);
        Bitrade b = fixtures::s3_triad();
        PartialLatinSquare q =
            apply_isotopism(b.circ(), random_inputs::random_isotopism(b.circ(), rng));
        auto forward = are_isotopic(b.circ(), q);
        REQUIRE(forward.outcome == SearchOutcome::found);
        CHECK(apply_isotopism(q, forward.witness->inverse()) == b.circ());
        auto backward = are_isotopic(q, b.circ());
        REQUIRE(backward.outcome == SearchOutcome::found);
    }
    SUBCASE("size mismatch is decided immediately") {
        PartialLatinSquare one(2, 2, 2, {{0, 0, 0}});
        auto result = are_isotopic(inter.circ(), one);
        CHECK(result.outcome == SearchOutcome::exhausted);
        CHECK(result.nodes == 0);
    }
    SUBCASE("exhausted budget is distinct from not isotopic") {
        Bitrade b = fixtures::example2();
        SearchCaps caps;
        caps.max_nodes = 2;
        auto result = are_isotopic(b.circ(), b.star(), caps);
        CHECK(result.outcome == SearchOutcome::budget_exceeded);
        // a blown degree cap reads the same way; the function stays total
        SearchCaps tight;
        tight.max_degree = 3;
        CHECK(are_isotopic(b.circ(), b.star(), tight).outcome ==
              SearchOutcome::budget_exceeded);
    }
}

TEST_CASE("bitrade isotopy search") {
    Bitrade inter = fixtures::intercalate();
    SUBCASE("identity on itself") {
        auto result = are_isotopic_bitrades(inter, inter);
        REQUIRE(result.outcome == SearchOutcome::found);
        CHECK(result.circ_witness->is_identity());
    }
    SUBCASE("row swap is recovered") {
        Isotopism swap{Permutation::from_cycles("(0,1)", 2), Permutation::identity(2),
                       Permutation::identity(2)};
        Bitrade moved = apply_isotopism(inter, swap);
        auto result = are_isotopic_bitrades(inter, moved);
        REQUIRE(result.outcome == SearchOutcome::found);
        CHECK(apply_isotopism(inter, *result.circ_witness) == moved);
    }
    SUBCASE("a random simultaneous relabeling is recovered") {
        std::mt19937_64 rng(21);
        auto groups = lbt::catalog::all_groups_up_to(8);
        Bitrade b = random_inputs::random_bitrade(groups, rng);
        Bitrade moved = apply_isotopism(b, random_inputs::random_isotopism(b.circ(), rng));
        auto result = are_isotopic_bitrades(b, moved);
        REQUIRE(result.outcome == SearchOutcome::found);
        CHECK(apply_isotopism(b, *result.circ_witness) == moved);
        CHECK(result.circ_witness == result.star_witness);

        auto indep = are_isotopic_bitrades(b, moved, BitradeIsotopyMode::independent);
        REQUIRE(indep.outcome == SearchOutcome::found);
        CHECK(apply_isotopism(b.circ(), *indep.circ_witness) == moved.circ());
        CHECK(apply_isotopism(b.star(), *indep.star_witness) == moved.star());
    }
}
