// random_inputs.hpp -- seeded generators for property-style tests
#pragma once

#include <random>

#include "lbt/catalog.hpp"
#include "lbt/groups.hpp"
#include "lbt/pls.hpp"

namespace random_inputs {

inline lbt::Permutation random_permutation(uint32_t n, std::mt19937_64& rng) {
    std::vector<uint32_t> v(n);
    for (uint32_t i = 0; i < n; ++i) v[i] = i;
    std::shuffle(v.begin(), v.end(), rng);
    return lbt::Permutation(std::move(v));
}

inline lbt::Isotopism random_isotopism(const lbt::PartialLatinSquare& p,
                                       std::mt19937_64& rng) {
    return {random_permutation(p.n_rows(), rng), random_permutation(p.n_cols(), rng),
            random_permutation(p.n_syms(), rng)};
}

// a valid bitrade: a random construction triad over a random catalog group,
// relabeled by a random simultaneous isotopism
inline lbt::Bitrade random_bitrade(const std::vector<lbt::CayleyGroup>& groups,
                                   std::mt19937_64& rng) {
    for (;;) {
        const auto& g = groups[rng() % groups.size()];
        if (g.order < 4) continue;
        uint32_t a = 1 + static_cast<uint32_t>(rng() % (g.order - 1));
        uint32_t b = 1 + static_cast<uint32_t>(rng() % (g.order - 1));
        uint32_t c = g.inv(g.mul(a, b));
        if (c == 0) continue;
        lbt::TriadSpec spec{g, a, b, c};
        if (!lbt::check_triad(spec).construction_ready()) continue;
        lbt::Bitrade built = lbt::group_based_bitrade(spec).bitrade;
        return lbt::apply_isotopism(built, random_isotopism(built.circ(), rng));
    }
}

} // namespace random_inputs
