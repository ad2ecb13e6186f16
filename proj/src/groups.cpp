#include "lbt/groups.hpp"

#include <algorithm>
#include <stdexcept>

#include "lbt/analysis.hpp"

namespace lbt {

namespace {

bool trivial_intersection(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> shared;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
    return shared.size() == 1; // the identity only
}

} // namespace

TriadReport check_triad(const TriadSpec& spec) {
    const CayleyGroup& g = spec.group;
    if (spec.a >= g.order || spec.b >= g.order || spec.c >= g.order)
        throw std::invalid_argument("triad element out of range");
    if (spec.a == 0 || spec.b == 0 || spec.c == 0)
        throw std::invalid_argument("triad elements must not be the identity");
    TriadReport report;
    report.non_identity = true;
    report.product_is_identity = g.mul(g.mul(spec.a, spec.b), spec.c) == 0;
    auto A = g.cyclic_subgroup(spec.a);
    auto B = g.cyclic_subgroup(spec.b);
    auto C = g.cyclic_subgroup(spec.c);
    report.intersections_trivial = trivial_intersection(A, B) &&
                                   trivial_intersection(A, C) &&
                                   trivial_intersection(B, C);
    report.generates_group =
        g.subgroup_closure({spec.a, spec.b, spec.c}).size() == g.order;
    return report;
}

GroupBitrade group_based_bitrade(const TriadSpec& spec) {
    TriadReport report = check_triad(spec);
    if (!report.construction_ready())
        throw std::invalid_argument(
            !report.product_is_identity
                ? "triad product a*b*c is not the identity"
                : "triad cyclic subgroups do not intersect trivially");
    const CayleyGroup& g = spec.group;
    CosetLabelling labels;
    labels.row_of = g.left_coset_index(g.cyclic_subgroup(spec.a));
    labels.col_of = g.left_coset_index(g.cyclic_subgroup(spec.b));
    labels.sym_of = g.left_coset_index(g.cyclic_subgroup(spec.c));
    labels.n_rows = *std::max_element(labels.row_of.begin(), labels.row_of.end()) + 1;
    labels.n_cols = *std::max_element(labels.col_of.begin(), labels.col_of.end()) + 1;
    labels.n_syms = *std::max_element(labels.sym_of.begin(), labels.sym_of.end()) + 1;
    labels.star_sym_of.resize(g.order);
    uint32_t a_inv = g.inv(spec.a);
    std::vector<Triple> circ, star;
    for (uint32_t x = 0; x < g.order; ++x) {
        circ.push_back({labels.row_of[x], labels.col_of[x], labels.sym_of[x]});
        labels.star_sym_of[x] = labels.sym_of[g.mul(x, a_inv)];
        star.push_back({labels.row_of[x], labels.col_of[x], labels.star_sym_of[x]});
    }
    PartialLatinSquare t_circ(labels.n_rows, labels.n_cols, labels.n_syms, std::move(circ));
    PartialLatinSquare t_star(labels.n_rows, labels.n_cols, labels.n_syms, std::move(star));
    return {Bitrade(std::move(t_circ), std::move(t_star)), std::move(labels)};
}

VerifierReport verify_group_construction(const TriadSpec& spec, uint64_t primary_cap) {
    VerifierReport report;
    report.operation = "group_construction";
    const CayleyGroup& g = spec.group;
    TriadReport triad = check_triad(spec);
    report.hypothesis("product_is_identity", triad.product_is_identity);
    report.hypothesis("intersections_trivial", triad.intersections_trivial);
    if (!triad.construction_ready()) return report;

    GroupBitrade built = group_based_bitrade(spec);
    const Bitrade& b = built.bitrade;
    report.claim("valid_bitrade", validate_bitrade(b).ok());
    report.claim("size_is_group_order", b.circ().size() == g.order,
                 std::to_string(b.circ().size()) + " vs " + std::to_string(g.order));

    uint64_t na = g.element_order(spec.a);
    uint64_t nb = g.element_order(spec.b);
    uint64_t nc = g.element_order(spec.c);
    auto side_counts = [&](auto label_of) {
        std::vector<uint32_t> counts;
        for (const auto& t : b.circ().entries()) {
            uint32_t l = label_of(t);
            if (l >= counts.size()) counts.resize(l + 1, 0);
            ++counts[l];
        }
        return counts;
    };
    auto rows = side_counts([](const Triple& t) { return t.row; });
    auto cols = side_counts([](const Triple& t) { return t.col; });
    auto syms = side_counts([](const Triple& t) { return t.sym; });
    auto uniform = [](const std::vector<uint32_t>& v, uint64_t size, uint64_t count) {
        if (v.size() != count) return false;
        return std::all_of(v.begin(), v.end(),
                           [&](uint32_t n) { return n == size; });
    };
    report.claim("rows_are_cosets_of_a", uniform(rows, na, g.order / na));
    report.claim("cols_are_cosets_of_b", uniform(cols, nb, g.order / nb));
    report.claim("syms_are_cosets_of_c", uniform(syms, nc, g.order / nc));

    if (!triad.generates_group) {
        report.claims.push_back({"primary", ClaimStatus::inapplicable,
                                 "the triad does not generate the group"});
    } else if (g.order > primary_cap) {
        report.claims.push_back({"primary", ClaimStatus::capped,
                                 "group order exceeds the primary-check cap"});
    } else {
        PrimaryResult primary = is_primary(b);
        report.claim("primary", primary.status == PrimaryStatus::primary);
    }
    return report;
}

std::vector<TriadSpec> construction_triads(const CayleyGroup& g) {
    std::vector<TriadSpec> triads;
    for (uint32_t a = 1; a < g.order; ++a)
        for (uint32_t b = 1; b < g.order; ++b) {
            uint32_t c = g.inv(g.mul(a, b));
            if (c == 0) continue;
            TriadSpec spec{g, a, b, c};
            TriadReport report = check_triad(spec);
            if (report.construction_ready()) triads.push_back(std::move(spec));
        }
    return triads;
}

} // namespace lbt
