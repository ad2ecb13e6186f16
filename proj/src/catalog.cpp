#include "lbt/catalog.hpp"

#include <map>
#include <stdexcept>

namespace lbt {
namespace catalog {

CayleyGroup cyclic(uint32_t n) {
    CayleyGroup g;
    g.name = "C" + std::to_string(n);
    g.order = n;
    g.table.resize(static_cast<size_t>(n) * n);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
    return g;
}

CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b) {
    CayleyGroup g;
    g.name = a.name + "x" + b.name;
    g.order = a.order * b.order;
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    auto id = [&](uint32_t x, uint32_t y) { return x * b.order + y; };
    for (uint32_t x1 = 0; x1 < a.order; ++x1)
        for (uint32_t y1 = 0; y1 < b.order; ++y1)
            for (uint32_t x2 = 0; x2 < a.order; ++x2)
                for (uint32_t y2 = 0; y2 < b.order; ++y2)
                    g.table[id(x1, y1) * g.order + id(x2, y2)] =
                        id(a.mul(x1, x2), b.mul(y1, y2));
    return g;
}

CayleyGroup two_generator(uint32_t n, uint32_t e, uint32_t t, const std::string& name) {
    // elements: r^i (index i) and r^i s (index n+i)
    CayleyGroup g;
    g.name = name;
    g.order = 2 * n;
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    auto mul = [&](uint32_t x, uint32_t y) -> uint32_t {
        uint32_t i = x % n, j = y % n;
        bool xs = x >= n, ys = y >= n;
        // (r^i s^xs)(r^j s^ys): move s past r^j using s r = r^t s
        uint32_t exp = xs ? (i + t * j) % n : (i + j) % n;
        if (xs && ys) return (exp + e) % n; // s^2 = r^e
        if (xs || ys) return n + exp;
        return exp;
    };
    for (uint32_t x = 0; x < g.order; ++x)
        for (uint32_t y = 0; y < g.order; ++y) g.table[x * g.order + y] = mul(x, y);
    return g;
}

CayleyGroup dihedral(uint32_t n) {
    return two_generator(n, 0, n - 1, "D" + std::to_string(n));
}

CayleyGroup quaternion8() { return two_generator(4, 2, 3, "Q8"); }
CayleyGroup quaternion16() { return two_generator(8, 4, 7, "Q16"); }
CayleyGroup semidihedral16() { return two_generator(8, 0, 3, "SD16"); }
CayleyGroup modular16() { return two_generator(8, 0, 5, "M16"); }
CayleyGroup dicyclic12() { return two_generator(6, 3, 5, "Dic3"); }

CayleyGroup c4_semidirect_c4() {
    // elements a^i b^j, index i + 4j; b^-1 a b = a^-1
    CayleyGroup g;
    g.name = "C4:C4";
    g.order = 16;
    g.table.resize(256);
    auto mul = [&](uint32_t x, uint32_t y) {
        uint32_t i1 = x % 4, j1 = x / 4, i2 = y % 4, j2 = y / 4;
        uint32_t i = (j1 % 2 == 0) ? (i1 + i2) % 4 : (i1 + 4 - i2 % 4) % 4;
        return i + 4 * ((j1 + j2) % 4);
    };
    for (uint32_t x = 0; x < 16; ++x)
        for (uint32_t y = 0; y < 16; ++y) g.table[x * 16 + y] = mul(x, y);
    return g;
}

CayleyGroup c2c2_semidirect_c4() {
    // elements (v, j) with v in F2^2, j in Z4; conjugation by the C4
    // generator swaps the two coordinates of v. index = v + 4j.
    CayleyGroup g;
    g.name = "(C2xC2):C4";
    g.order = 16;
    g.table.resize(256);
    auto swap_bits = [](uint32_t v) { return ((v & 1u) << 1) | ((v >> 1) & 1u); };
    auto mul = [&](uint32_t x, uint32_t y) {
        uint32_t v1 = x % 4, j1 = x / 4, v2 = y % 4, j2 = y / 4;
        uint32_t v2c = (j1 % 2 == 0) ? v2 : swap_bits(v2);
        return (v1 ^ v2c) + 4 * ((j1 + j2) % 4);
    };
    for (uint32_t x = 0; x < 16; ++x)
        for (uint32_t y = 0; y < 16; ++y) g.table[x * 16 + y] = mul(x, y);
    return g;
}

CayleyGroup pauli16() {
    // central product of D4 = <r,s> and C4 = <c>, identifying r^2 with c^2:
    // quotient of the direct product by {(0,0),(r^2,c^2)}.
    CayleyGroup product = direct_product(dihedral(4), cyclic(4));
    const uint32_t r2 = 2;           // r^2 in two_generator indexing
    const uint32_t c2 = 2;           // c^2 in cyclic indexing
    const uint32_t z = r2 * 4 + c2;  // the identified central element
    std::vector<uint32_t> rep(product.order);
    for (uint32_t x = 0; x < product.order; ++x)
        rep[x] = std::min(x, product.mul(x, z));
    std::vector<uint32_t> reps;
    for (uint32_t x = 0; x < product.order; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::map<uint32_t, uint32_t> index;
    for (uint32_t i = 0; i < reps.size(); ++i) index[reps[i]] = i;

    CayleyGroup g;
    g.name = "D4oC4";
    g.order = static_cast<uint32_t>(reps.size());
    g.table.resize(static_cast<size_t>(g.order) * g.order);
    for (uint32_t a = 0; a < g.order; ++a)
        for (uint32_t b = 0; b < g.order; ++b)
            g.table[a * g.order + b] = index.at(rep[product.mul(reps[a], reps[b])]);
    return g;
}

CayleyGroup alternating4() {
    std::vector<Permutation> gens{Permutation::from_cycles("(0,1,2)", 4),
                                  Permutation::from_cycles("(0,1)(2,3)", 4)};
    return cayley_table_of(PermGroup::closure(4, gens), "A4");
}

CayleyGroup symmetric(uint32_t n) {
    if (n < 2 || n > 5) throw std::invalid_argument("symmetric(n) supports 2 <= n <= 5");
    std::vector<uint32_t> cyc(n);
    for (uint32_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    std::vector<uint32_t> swp(n);
    for (uint32_t i = 0; i < n; ++i) swp[i] = i;
    std::swap(swp[0], swp[1]);
    std::vector<Permutation> gens{Permutation(cyc), Permutation(swp)};
    return cayley_table_of(PermGroup::closure(n, gens), "S" + std::to_string(n));
}

std::vector<CayleyGroup> all_groups_up_to(uint32_t max_order) {
    if (max_order > 16) throw std::invalid_argument("catalog covers orders up to 16");
    std::vector<CayleyGroup> all;
    auto add = [&](CayleyGroup g) {
        if (g.order <= max_order) all.push_back(std::move(g));
    };
    add(cyclic(1));
    add(cyclic(2));
    add(cyclic(3));
    add(cyclic(4));
    add(direct_product(cyclic(2), cyclic(2)));
    add(cyclic(5));
    add(cyclic(6));
    add(dihedral(3)); // = S3
    add(cyclic(7));
    add(cyclic(8));
    add(direct_product(cyclic(4), cyclic(2)));
    add(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)));
    add(dihedral(4));
    add(quaternion8());
    add(cyclic(9));
    add(direct_product(cyclic(3), cyclic(3)));
    add(cyclic(10));
    add(dihedral(5));
    add(cyclic(11));
    add(cyclic(12));
    add(direct_product(cyclic(6), cyclic(2)));
    add(dihedral(6));
    add(alternating4());
    add(dicyclic12());
    add(cyclic(13));
    add(cyclic(14));
    add(dihedral(7));
    add(cyclic(15));
    add(cyclic(16));
    add(direct_product(cyclic(8), cyclic(2)));
    add(direct_product(cyclic(4), cyclic(4)));
    add(direct_product(direct_product(cyclic(4), cyclic(2)), cyclic(2)));
    add(direct_product(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)),
                       cyclic(2)));
    add(dihedral(8));
    add(quaternion16());
    add(semidihedral16());
    add(modular16());
    add(direct_product(dihedral(4), cyclic(2)));
    add(direct_product(quaternion8(), cyclic(2)));
    add(c4_semidirect_c4());
    add(c2c2_semidirect_c4());
    add(pauli16());
    return all;
}

} // namespace catalog
} // namespace lbt
