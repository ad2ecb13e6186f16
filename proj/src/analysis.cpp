#include "lbt/analysis.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "isotopy_search.hpp"

namespace lbt {

ThinResult is_thin(const Bitrade& b) {
    ThinResult result;
    std::map<uint32_t, std::vector<Triple>> by_sym;
    for (const auto& t : b.circ().entries()) by_sym[t.sym].push_back(t);
    for (const auto& [sym, entries] : by_sym) {
        for (const auto& e : entries)
            for (const auto& f : entries) {
                if (e.row == f.row || e.col == f.col) continue;
                auto star = b.star().sym_at(e.row, f.col);
                if (star && *star != sym) {
                    result.thin = false;
                    result.counterexample = {e, f};
                    result.star_sym = *star;
                    return result;
                }
            }
    }
    result.thin = true;
    return result;
}

MateEnumeration enumerate_disjoint_mates(const PartialLatinSquare& t, size_t limit) {
    MateEnumeration result;
    if (t.n_syms() > 64)
        throw cap_exceeded("mate enumeration supports at most 64 symbols");
    const auto& entries = t.entries();
    const size_t m = entries.size();
    // row/column symbol sets still to place, as bitmasks
    std::vector<uint64_t> row_need(t.n_rows(), 0), col_need(t.n_cols(), 0);
    for (const auto& e : entries) {
        row_need[e.row] |= 1ull << e.sym;
        col_need[e.col] |= 1ull << e.sym;
    }
    std::vector<uint32_t> chosen(m, 0);
    auto backtrack = [&](auto&& self, size_t i) -> void {
        if (result.truncated) return;
        if (i == m) {
            if (result.mates.size() >= limit) {
                result.truncated = true;
                return;
            }
            std::vector<Triple> mate;
            mate.reserve(m);
            for (size_t k = 0; k < m; ++k)
                mate.push_back({entries[k].row, entries[k].col, chosen[k]});
            result.mates.emplace_back(t.n_rows(), t.n_cols(), t.n_syms(), std::move(mate));
            return;
        }
        const Triple& e = entries[i];
        uint64_t options = row_need[e.row] & col_need[e.col] & ~(1ull << e.sym);
        while (options) {
            uint32_t s = static_cast<uint32_t>(std::countr_zero(options));
            options &= options - 1;
            chosen[i] = s;
            row_need[e.row] &= ~(1ull << s);
            col_need[e.col] &= ~(1ull << s);
            self(self, i + 1);
            row_need[e.row] |= 1ull << s;
            col_need[e.col] |= 1ull << s;
            if (result.truncated) return;
        }
    };
    backtrack(backtrack, 0);
    return result;
}

PrimaryResult is_primary(const Bitrade& b, uint64_t cap) {
    PrimaryResult result;
    if (b.size() == 0) {
        result.status = PrimaryStatus::primary; // vacuously: no nonempty sub-pair
        return result;
    }
    auto beta1 = compute_beta(b, 1);
    auto beta2 = compute_beta(b, 2);
    auto beta3 = compute_beta(b, 3);
    // orbit of entry 0 under the partner closure
    std::vector<uint32_t> inv1(beta1.size()), inv2(beta2.size()), inv3(beta3.size());
    for (uint32_t j = 0; j < beta1.size(); ++j) inv1[beta1[j]] = j;
    for (uint32_t j = 0; j < beta2.size(); ++j) inv2[beta2[j]] = j;
    for (uint32_t j = 0; j < beta3.size(); ++j) inv3[beta3[j]] = j;
    std::vector<bool> circ_in(b.size(), false), star_in(b.size(), false);
    std::vector<uint32_t> todo{0};
    circ_in[0] = true;
    uint64_t visited = 0;
    while (!todo.empty()) {
        uint32_t e = todo.back();
        todo.pop_back();
        if (++visited > cap) {
            result.status = PrimaryStatus::unknown;
            result.nodes = visited;
            return result;
        }
        // the three forced star partners of a circ entry
        for (uint32_t j : {inv1[e], inv2[e], inv3[e]}) {
            if (star_in[j]) continue;
            star_in[j] = true;
            // and the circ partners of that star entry
            for (uint32_t f : {beta1[j], beta2[j], beta3[j]}) {
                if (!circ_in[f]) {
                    circ_in[f] = true;
                    todo.push_back(f);
                }
            }
        }
    }
    result.nodes = visited;
    size_t orbit_size = static_cast<size_t>(std::count(circ_in.begin(), circ_in.end(), true));
    if (orbit_size == b.size()) {
        result.status = PrimaryStatus::primary;
        return result;
    }
    result.status = PrimaryStatus::not_primary;
    std::vector<Triple> sub_circ, sub_star;
    for (uint32_t i = 0; i < b.size(); ++i) {
        if (circ_in[i]) sub_circ.push_back(b.circ().entries()[i]);
        if (star_in[i]) sub_star.push_back(b.star().entries()[i]);
    }
    const auto& c = b.circ();
    result.witness = Bitrade({c.n_rows(), c.n_cols(), c.n_syms(), std::move(sub_circ)},
                             {c.n_rows(), c.n_cols(), c.n_syms(), std::move(sub_star)});
    return result;
}

Isotopism AutotopismGroup::isotopism_of(const Permutation& fused_element) const {
    std::vector<uint32_t> r(n_rows), c(n_cols), s(n_syms);
    for (uint32_t i = 0; i < n_rows; ++i) r[i] = fused_element[i];
    for (uint32_t i = 0; i < n_cols; ++i) c[i] = fused_element[n_rows + i] - n_rows;
    for (uint32_t i = 0; i < n_syms; ++i)
        s[i] = fused_element[n_rows + n_cols + i] - n_rows - n_cols;
    return {Permutation(std::move(r)), Permutation(std::move(c)), Permutation(std::move(s))};
}

Permutation AutotopismGroup::fuse(const Isotopism& g) const {
    std::vector<uint32_t> img(n_rows + n_cols + n_syms);
    for (uint32_t i = 0; i < n_rows; ++i) img[i] = g.rows[i];
    for (uint32_t i = 0; i < n_cols; ++i) img[n_rows + i] = n_rows + g.cols[i];
    for (uint32_t i = 0; i < n_syms; ++i)
        img[n_rows + n_cols + i] = n_rows + n_cols + g.syms[i];
    return Permutation(std::move(img));
}

std::vector<Isotopism> AutotopismGroup::elements() const {
    std::vector<Isotopism> result;
    result.reserve(fused.order());
    for (const auto& e : fused.elements()) result.push_back(isotopism_of(e));
    return result;
}

bool AutotopismGroup::contains(const Isotopism& g) const {
    return fused.contains(fuse(g));
}

namespace {

AutotopismGroup stabilizer_search(const PartialLatinSquare& circ,
                                  const PartialLatinSquare* star, const SearchCaps& caps) {
    if (!circ.all_labels_used() || (star && !star->all_labels_used()))
        throw std::invalid_argument(
            "autotopism groups are computed over fully used label sets");
    detail::IsotopySearch search(circ, circ, star, star, caps);
    std::vector<Isotopism> found;
    SearchOutcome outcome = search.run(found, /*first_only=*/false);
    if (outcome == SearchOutcome::budget_exceeded)
        throw cap_exceeded("autotopism search exceeded the node budget");
    AutotopismGroup group;
    group.n_rows = circ.n_rows();
    group.n_cols = circ.n_cols();
    group.n_syms = circ.n_syms();
    group.stabilizes = star ? StabilizedSide::both_sides : StabilizedSide::circ_only;
    std::vector<Permutation> fused;
    fused.reserve(found.size());
    for (const auto& iso : found) fused.push_back(group.fuse(iso));
    group.fused = PermGroup::from_elements(group.n_rows + group.n_cols + group.n_syms,
                                           std::move(fused));
    return group;
}

} // namespace

AutotopismGroup autotopism_group(const PartialLatinSquare& t, const SearchCaps& caps) {
    return stabilizer_search(t, nullptr, caps);
}

AutotopismGroup autotopism_group_bitrade(const Bitrade& b, const SearchCaps& caps) {
    return stabilizer_search(b.circ(), &b.star(), caps);
}

std::optional<Permutation> entry_action_of(const PartialLatinSquare& t, const Isotopism& g) {
    std::vector<uint32_t> img(t.size());
    for (uint32_t i = 0; i < t.size(); ++i) {
        auto target = t.index_of(g.apply(t.entries()[i]));
        if (!target) return std::nullopt;
        img[i] = *target;
    }
    return Permutation(std::move(img));
}

GroupAction entry_action(const AutotopismGroup& g, const PartialLatinSquare& t) {
    GroupAction action{g.fused, static_cast<uint32_t>(t.size()), {}};
    for (const auto& e : g.fused.elements()) {
        auto p = entry_action_of(t, g.isotopism_of(e));
        if (!p)
            throw std::logic_error("stabilizer element does not stabilize the square");
        action.point_images.push_back(std::move(*p));
    }
    return action;
}

bool is_transitive_bitrade(const Bitrade& b, const SearchCaps& caps) {
    AutotopismGroup both = autotopism_group_bitrade(b, caps);
    return is_transitive_action(entry_action(both, b.circ())) &&
           is_transitive_action(entry_action(both, b.star()));
}

bool is_regular_autotopism_action(const PartialLatinSquare& t, const SearchCaps& caps) {
    AutotopismGroup group = autotopism_group(t, caps);
    return is_regular_action(entry_action(group, t));
}

PermGroup tau_automorphism_group(const TauRepresentation& t, uint64_t element_cap) {
    // the generated group is never enumerated; it can be large
    return centralizer_in_sym(t.m, {t.tau1, t.tau2, t.tau3}, element_cap);
}

} // namespace lbt
