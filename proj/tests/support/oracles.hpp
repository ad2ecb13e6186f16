// oracles.hpp -- brute-force reference computations, independent of the
// library's search paths. Everything here scans exhaustively and is only
// usable at tiny sizes, which is the point.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lbt/perm.hpp"
#include "lbt/pls.hpp"

namespace oracles {

inline std::vector<lbt::Permutation> all_permutations(uint32_t n) {
    std::vector<uint32_t> v(n);
    for (uint32_t i = 0; i < n; ++i) v[i] = i;
    std::vector<lbt::Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// every isotopism mapping p onto q, by scanning all |S_R||S_C||S_S| triples
inline std::vector<lbt::Isotopism> isotopisms_between(const lbt::PartialLatinSquare& p,
                                                      const lbt::PartialLatinSquare& q) {
    std::vector<lbt::Isotopism> found;
    for (const auto& r : all_permutations(p.n_rows()))
        for (const auto& c : all_permutations(p.n_cols()))
            for (const auto& s : all_permutations(p.n_syms())) {
                lbt::Isotopism g{r, c, s};
                bool ok = p.size() == q.size();
                for (const auto& e : p.entries()) {
                    if (!q.index_of(g.apply(e))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) found.push_back(std::move(g));
            }
    return found;
}

inline std::vector<lbt::Isotopism> autotopisms(const lbt::PartialLatinSquare& p) {
    return isotopisms_between(p, p);
}

// every disjoint mate, by scanning all per-cell symbol assignments and
// keeping those that validate as a bitrade against t
inline std::vector<lbt::PartialLatinSquare> mates(const lbt::PartialLatinSquare& t) {
    std::vector<lbt::PartialLatinSquare> found;
    const auto& entries = t.entries();
    std::vector<uint32_t> choice(entries.size(), 0);
    auto scan = [&](auto&& self, size_t i) -> void {
        if (i == entries.size()) {
            std::vector<lbt::Triple> mate;
            for (size_t k = 0; k < entries.size(); ++k)
                mate.push_back({entries[k].row, entries[k].col, choice[k]});
            lbt::PartialLatinSquare candidate(t.n_rows(), t.n_cols(), t.n_syms(),
                                              std::move(mate));
            if (candidate.size() != t.size()) return;
            if (!lbt::validate_pls(candidate).ok()) return;
            if (!lbt::validate_bitrade(lbt::Bitrade(t, candidate)).ok()) return;
            found.push_back(std::move(candidate));
            return;
        }
        for (uint32_t s = 0; s < t.n_syms(); ++s) {
            choice[i] = s;
            self(self, i + 1);
        }
    };
    scan(scan, 0);
    return found;
}

// primality by scanning every nonempty proper subset of the circ side:
// the star side of a sub-bitrade is forced to be the set of partners of the
// chosen circ entries, so each subset admits at most one candidate pair
inline bool primary(const lbt::Bitrade& b) {
    const auto& circ = b.circ().entries();
    const auto& star = b.star().entries();
    const size_t m = circ.size();
    for (uint64_t mask = 1; mask + 1 < (1ull << m); ++mask) {
        std::vector<lbt::Triple> sub_circ;
        for (size_t i = 0; i < m; ++i)
            if (mask >> i & 1) sub_circ.push_back(circ[i]);
        // candidate star side: entries sharing two coordinates with a chosen one
        std::vector<lbt::Triple> sub_star;
        for (const auto& s : star) {
            bool partnered = false;
            for (const auto& c : sub_circ) {
                int agree = (s.row == c.row) + (s.col == c.col) + (s.sym == c.sym);
                if (agree == 2) partnered = true;
            }
            if (partnered) sub_star.push_back(s);
        }
        if (sub_star.empty()) continue;
        lbt::PartialLatinSquare uc(b.circ().n_rows(), b.circ().n_cols(), b.circ().n_syms(),
                                   sub_circ);
        lbt::PartialLatinSquare us(b.circ().n_rows(), b.circ().n_cols(), b.circ().n_syms(),
                                   sub_star);
        if (lbt::validate_bitrade(lbt::Bitrade(uc, us)).ok()) return false;
    }
    return true;
}

// centralizer by scanning the full symmetric group; degree <= 8 or so
inline std::vector<lbt::Permutation> centralizer(uint32_t degree,
                                                 const std::vector<lbt::Permutation>& gens) {
    std::vector<lbt::Permutation> found;
    for (const auto& p : all_permutations(degree)) {
        bool ok = true;
        for (const auto& g : gens)
            if (p * g != g * p) {
                ok = false;
                break;
            }
        if (ok) found.push_back(p);
    }
    return found;
}

} // namespace oracles
