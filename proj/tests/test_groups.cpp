#include <doctest.h>

#include "lbt/catalog.hpp"
#include "lbt/groups.hpp"
#include "lbt/tau.hpp"
#include "support/fixtures.hpp"

using namespace lbt;

TEST_CASE("triad conditions") {
    SUBCASE("additive order three: product fine, subgroups collide") {
        TriadSpec spec{catalog::cyclic(3), 1, 1, 1};
        auto report = check_triad(spec);
        CHECK(report.product_is_identity);
        CHECK_FALSE(report.intersections_trivial);
    }
    SUBCASE("two transpositions of the order-six group") {
        CayleyGroup s3 = catalog::symmetric(3);
        // element 2 is the image-array [1,0,2] transposition, element 1 is [0,2,1]
        uint32_t a = 2, b = 1;
        uint32_t c = s3.inv(s3.mul(a, b));
        auto report = check_triad({s3, a, b, c});
        CHECK(report.product_is_identity);
        CHECK(report.intersections_trivial);
        CHECK(report.generates_group);
        CHECK(s3.element_order(c) == 3);
    }
    SUBCASE("order four with a nested subgroup") {
        TriadSpec spec{catalog::cyclic(4), 1, 1, 2};
        auto report = check_triad(spec);
        CHECK(report.product_is_identity);
        CHECK_FALSE(report.intersections_trivial); // <2> sits inside <1>
    }
    SUBCASE("identity elements are rejected outright") {
        CHECK_THROWS_AS(check_triad({catalog::cyclic(4), 0, 1, 3}), std::invalid_argument);
    }
}

TEST_CASE("coset construction shapes") {
    SUBCASE("order-six group, both generators of order two") {
        CayleyGroup s3 = catalog::symmetric(3);
        uint32_t a = 2, b = 1, c = s3.inv(s3.mul(a, b));
        GroupBitrade built = group_based_bitrade({s3, a, b, c});
        CHECK(built.bitrade.size() == 6);
        CHECK(validate_bitrade(built.bitrade).ok());
        CHECK(built.labels.n_rows == 3);
        CHECK(built.labels.n_cols == 3);
        CHECK(built.labels.n_syms == 2);
        // three rows of two entries, two symbols three times each
        std::vector<uint32_t> row_counts(3, 0), sym_counts(2, 0);
        for (const auto& t : built.bitrade.circ().entries()) {
            ++row_counts[t.row];
            ++sym_counts[t.sym];
        }
        CHECK(row_counts == std::vector<uint32_t>{2, 2, 2});
        CHECK(sym_counts == std::vector<uint32_t>{3, 3});
    }
    SUBCASE("the order-nine abelian group reproduces the cyclic pair up to isotopy") {
        CayleyGroup g = catalog::direct_product(catalog::cyclic(3), catalog::cyclic(3));
        uint32_t a = 3, b = 1; // the two factor generators
        uint32_t c = g.inv(g.mul(a, b));
        auto report = check_triad({g, a, b, c});
        REQUIRE(report.construction_ready());
        GroupBitrade built = group_based_bitrade({g, a, b, c});
        CHECK(built.bitrade.size() == 9);
        auto iso = are_isotopic_bitrades(built.bitrade, fixtures::cyclic3_pair());
        CHECK(iso.outcome == SearchOutcome::found);
    }
    SUBCASE("construction refuses a failing triad") {
        CayleyGroup z6 = catalog::cyclic(6);
        TriadSpec bad{z6, 2, 2, 2}; // product 6 = 0, but <2> is shared
        CHECK(check_triad(bad).product_is_identity);
        CHECK_FALSE(check_triad(bad).intersections_trivial);
        CHECK_THROWS_AS(group_based_bitrade(bad), std::invalid_argument);
    }
}

TEST_CASE("construction verifier") {
    SUBCASE("order-six triad passes everything including primality") {
        CayleyGroup s3 = catalog::symmetric(3);
        uint32_t a = 2, b = 1, c = s3.inv(s3.mul(a, b));
        auto report = verify_group_construction({s3, a, b, c});
        CHECK(report.hypotheses_met());
        CHECK_FALSE(report.any_failure());
        bool primary_pass = false;
        for (const auto& claim : report.claims)
            if (claim.name == "primary" && claim.status == ClaimStatus::pass)
                primary_pass = true;
        CHECK(primary_pass);
    }
    SUBCASE("primality check is capped, never guessed") {
        CayleyGroup s3 = catalog::symmetric(3);
        uint32_t a = 2, b = 1, c = s3.inv(s3.mul(a, b));
        auto report = verify_group_construction({s3, a, b, c}, /*primary_cap=*/4);
        bool capped = false;
        for (const auto& claim : report.claims)
            if (claim.name == "primary" && claim.status == ClaimStatus::capped)
                capped = true;
        CHECK(capped);
        CHECK_FALSE(report.any_failure());
    }
    SUBCASE("a triad failing its conditions reports no claims at all") {
        CayleyGroup z6 = catalog::cyclic(6);
        auto report = verify_group_construction({z6, 2, 2, 2});
        CHECK_FALSE(report.hypotheses_met());
        CHECK(report.claims.empty());
        CHECK_FALSE(report.any_failure());
    }
    SUBCASE("a non-generating triad reports primality as inapplicable") {
        CayleyGroup e8 = catalog::direct_product(
            catalog::direct_product(catalog::cyclic(2), catalog::cyclic(2)),
            catalog::cyclic(2));
        // two involutions generate only a subgroup of order four
        uint32_t a = 1, b = 2, c = e8.inv(e8.mul(a, b));
        auto triad = check_triad({e8, a, b, c});
        REQUIRE(triad.construction_ready());
        CHECK_FALSE(triad.generates_group);
        auto report = verify_group_construction({e8, a, b, c});
        CHECK_FALSE(report.any_failure());
        bool inapplicable = false;
        for (const auto& claim : report.claims)
            if (claim.name == "primary" && claim.status == ClaimStatus::inapplicable)
                inapplicable = true;
        CHECK(inapplicable);
    }
}

TEST_CASE("triad enumeration") {
    CHECK(construction_triads(catalog::quaternion8()).empty());
    CHECK(construction_triads(catalog::cyclic(4)).empty());
    // the Klein group's three involutions give all six ordered pairs
    CHECK(construction_triads(catalog::direct_product(catalog::cyclic(2),
                                                      catalog::cyclic(2)))
              .size() == 6);
}

TEST_CASE("constructions across the small catalog validate with the stated sizes") {
    for (const auto& g : catalog::all_groups_up_to(8)) {
        for (const auto& triad : construction_triads(g)) {
            auto report = verify_group_construction(triad);
            INFO(g.name, " a=", triad.a, " b=", triad.b);
            CHECK_FALSE(report.any_failure());
        }
    }
}

TEST_CASE("left translations act on both sides of a construction") {
    CayleyGroup s3 = catalog::symmetric(3);
    uint32_t a = 2, b = 1, c = s3.inv(s3.mul(a, b));
    GroupBitrade built = group_based_bitrade({s3, a, b, c});
    for (uint32_t h = 0; h < s3.order; ++h) {
        // the isotopism induced by g -> h*g on each coset family
        auto coset_perm = [&](const std::vector<uint32_t>& label_of, uint32_t count) {
            std::vector<uint32_t> img(count, UINT32_MAX);
            for (uint32_t g = 0; g < s3.order; ++g) img[label_of[g]] = label_of[s3.mul(h, g)];
            return Permutation(std::move(img));
        };
        Isotopism translation{coset_perm(built.labels.row_of, built.labels.n_rows),
                              coset_perm(built.labels.col_of, built.labels.n_cols),
                              coset_perm(built.labels.sym_of, built.labels.n_syms)};
        CHECK(apply_isotopism(built.bitrade.circ(), translation) == built.bitrade.circ());
        CHECK(apply_isotopism(built.bitrade.star(), translation) == built.bitrade.star());
    }
}
