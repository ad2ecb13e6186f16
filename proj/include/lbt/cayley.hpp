// cayley.hpp -- finite groups given by explicit multiplication tables
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lbt/perm.hpp"

namespace lbt {

/**
 * A finite group as an order x order multiplication table over element
 * indices 0..order-1, with index 0 the identity. table[g*order + h] = g*h.
 */
struct CayleyGroup {
    std::string name;
    uint32_t order = 0;
    std::vector<uint32_t> table;

    uint32_t mul(uint32_t g, uint32_t h) const { return table[g * order + h]; }
    uint32_t inv(uint32_t g) const;
    uint64_t element_order(uint32_t g) const;
    bool is_abelian() const;

    // Elements of the cyclic subgroup <g>, sorted ascending.
    std::vector<uint32_t> cyclic_subgroup(uint32_t g) const;
    // Closure of an arbitrary subset, sorted ascending.
    std::vector<uint32_t> subgroup_closure(std::vector<uint32_t> seed) const;

    // Left cosets g*H of a subgroup (given as a sorted element list).
    // Cosets are indexed in order of their minimal element; returns the coset
    // index of every g.
    std::vector<uint32_t> left_coset_index(const std::vector<uint32_t>& subgroup) const;

    // Sorted multiset of element orders; a cheap isomorphism invariant.
    std::vector<uint64_t> order_profile() const;
};

struct CayleyViolation {
    enum class Kind { shape, row_not_bijective, col_not_bijective, identity, associativity };
    Kind kind;
    uint32_t a = 0, b = 0, c = 0;
};

struct CayleyReport {
    std::vector<CayleyViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks table shape, that every row and column is a permutation, that index
// 0 is a two-sided identity, and associativity (exhaustively; desk scale).
CayleyReport validate_cayley(const CayleyGroup& g);

struct RegularRepresentations {
    PermGroup right; // x acts by a -> a*x
    PermGroup left;  // y acts by a -> y^-1 * a
};

// Both regular actions of g on itself. The left image is elementwise the
// centralizer of the right image in the symmetric group, and vice versa.
RegularRepresentations regular_representations(const CayleyGroup& g);

// The Cayley table of a permutation group: elements are indexed by their
// sorted position in g.elements() (identity first).
CayleyGroup cayley_table_of(const PermGroup& g, const std::string& name);

} // namespace lbt
