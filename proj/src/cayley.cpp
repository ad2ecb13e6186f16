#include "lbt/cayley.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lbt {

uint32_t CayleyGroup::inv(uint32_t g) const {
    for (uint32_t h = 0; h < order; ++h)
        if (mul(g, h) == 0) return h;
    throw std::invalid_argument("element has no inverse; table is not a group");
}

uint64_t CayleyGroup::element_order(uint32_t g) const {
    uint64_t n = 1;
    uint32_t x = g;
    while (x != 0) {
        x = mul(x, g);
        ++n;
        if (n > order) throw std::invalid_argument("element order exceeds group order");
    }
    return n;
}

bool CayleyGroup::is_abelian() const {
    for (uint32_t a = 0; a < order; ++a)
        for (uint32_t b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<uint32_t> CayleyGroup::cyclic_subgroup(uint32_t g) const {
    std::vector<uint32_t> elems{0};
    uint32_t x = g;
    while (x != 0) {
        elems.push_back(x);
        x = mul(x, g);
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<uint32_t> CayleyGroup::subgroup_closure(std::vector<uint32_t> seed) const {
    std::set<uint32_t> elems{0};
    std::vector<uint32_t> todo{0};
    for (uint32_t s : seed)
        if (elems.insert(s).second) todo.push_back(s);
    while (!todo.empty()) {
        uint32_t x = todo.back();
        todo.pop_back();
        for (uint32_t s : seed) {
            for (uint32_t y : {mul(x, s), mul(s, x)})
                if (elems.insert(y).second) todo.push_back(y);
        }
        uint32_t xi = inv(x);
        if (elems.insert(xi).second) todo.push_back(xi);
    }
    return {elems.begin(), elems.end()};
}

std::vector<uint32_t> CayleyGroup::left_coset_index(
    const std::vector<uint32_t>& subgroup) const {
    std::vector<uint32_t> coset_min(order, order); // minimal element of g's coset
    for (uint32_t g = 0; g < order; ++g) {
        uint32_t m = order;
        for (uint32_t h : subgroup) m = std::min(m, mul(g, h));
        coset_min[g] = m;
    }
    // index cosets by their minimal element, ascending
    std::vector<uint32_t> mins;
    for (uint32_t g = 0; g < order; ++g)
        if (coset_min[g] == g) mins.push_back(g);
    std::sort(mins.begin(), mins.end());
    std::vector<uint32_t> index(order);
    for (uint32_t g = 0; g < order; ++g) {
        auto it = std::lower_bound(mins.begin(), mins.end(), coset_min[g]);
        index[g] = static_cast<uint32_t>(it - mins.begin());
    }
    return index;
}

std::vector<uint64_t> CayleyGroup::order_profile() const {
    std::vector<uint64_t> profile;
    for (uint32_t g = 0; g < order; ++g) profile.push_back(element_order(g));
    std::sort(profile.begin(), profile.end());
    return profile;
}

CayleyReport validate_cayley(const CayleyGroup& g) {
    CayleyReport report;
    if (g.order == 0 || g.table.size() != static_cast<size_t>(g.order) * g.order) {
        report.violations.push_back({CayleyViolation::Kind::shape, 0, 0, 0});
        return report;
    }
    for (uint32_t v : g.table)
        if (v >= g.order) {
            report.violations.push_back({CayleyViolation::Kind::shape, v, 0, 0});
            return report;
        }
    for (uint32_t a = 0; a < g.order; ++a) {
        std::vector<bool> seen(g.order, false);
        for (uint32_t b = 0; b < g.order; ++b) {
            uint32_t v = g.mul(a, b);
            if (seen[v])
                report.violations.push_back({CayleyViolation::Kind::row_not_bijective, a, b, v});
            seen[v] = true;
        }
    }
    for (uint32_t b = 0; b < g.order; ++b) {
        std::vector<bool> seen(g.order, false);
        for (uint32_t a = 0; a < g.order; ++a) {
            uint32_t v = g.mul(a, b);
            if (seen[v])
                report.violations.push_back({CayleyViolation::Kind::col_not_bijective, a, b, v});
            seen[v] = true;
        }
    }
    for (uint32_t a = 0; a < g.order; ++a)
        if (g.mul(0, a) != a || g.mul(a, 0) != a)
            report.violations.push_back({CayleyViolation::Kind::identity, a, 0, 0});
    if (!report.ok()) return report;
    for (uint32_t a = 0; a < g.order; ++a)
        for (uint32_t b = 0; b < g.order; ++b)
            for (uint32_t c = 0; c < g.order; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    report.violations.push_back({CayleyViolation::Kind::associativity, a, b, c});
    return report;
}

RegularRepresentations regular_representations(const CayleyGroup& g) {
    auto report = validate_cayley(g);
    if (!report.ok()) throw std::invalid_argument("invalid multiplication table");
    std::vector<Permutation> right, left;
    for (uint32_t x = 0; x < g.order; ++x) {
        std::vector<uint32_t> r(g.order), l(g.order);
        uint32_t xi = g.inv(x);
        for (uint32_t a = 0; a < g.order; ++a) {
            r[a] = g.mul(a, x);
            l[a] = g.mul(xi, a);
        }
        right.emplace_back(std::move(r));
        left.emplace_back(std::move(l));
    }
    return {PermGroup::from_elements(g.order, std::move(right)),
            PermGroup::from_elements(g.order, std::move(left))};
}

CayleyGroup cayley_table_of(const PermGroup& g, const std::string& name) {
    const auto& es = g.elements();
    auto index_of = [&](const Permutation& e) {
        return static_cast<uint32_t>(std::lower_bound(es.begin(), es.end(), e) - es.begin());
    };
    CayleyGroup cg;
    cg.name = name;
    cg.order = static_cast<uint32_t>(es.size());
    cg.table.resize(static_cast<size_t>(cg.order) * cg.order);
    for (uint32_t a = 0; a < cg.order; ++a)
        for (uint32_t b = 0; b < cg.order; ++b)
            cg.table[a * cg.order + b] = index_of(es[a] * es[b]);
    return cg;
}

} // namespace lbt
