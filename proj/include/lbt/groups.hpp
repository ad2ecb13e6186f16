// groups.hpp -- three-element generating data over a finite group and the
// coset-based bitrade construction it induces.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lbt/cayley.hpp"
#include "lbt/pls.hpp"
#include "lbt/report.hpp"

namespace lbt {

/**
 * Three non-identity elements a, b, c of a finite group, intended to satisfy:
 * abc = 1; the cyclic subgroups <a>, <b>, <c> intersect pairwise trivially;
 * and (optionally) <a,b,c> is the whole group.
 */
struct TriadSpec {
    CayleyGroup group;
    uint32_t a = 0, b = 0, c = 0;
};

struct TriadReport {
    bool non_identity = false;          // a, b, c all differ from the identity
    bool product_is_identity = false;   // a*b*c == 1
    bool intersections_trivial = false; // <a>,<b>,<c> pairwise meet only in 1
    bool generates_group = false;       // <a,b,c> == G
    bool construction_ready() const {
        return non_identity && product_is_identity && intersections_trivial;
    }
};

// Evaluates all triad conditions. Throws std::invalid_argument when one of
// a, b, c is the identity (the other flags are still about well-defined data).
TriadReport check_triad(const TriadSpec& spec);

/**
 * Row labels are the left cosets of <a>, columns of <b>, symbols of <c>,
 * each indexed by minimal coset element. circ_coset / star_sym_coset give,
 * for every group element g, the labels of its circ entry (gA, gB, gC) and
 * the symbol label of its star entry (gA, gB, g a^-1 C).
 */
struct CosetLabelling {
    std::vector<uint32_t> row_of, col_of, sym_of; // per group element
    std::vector<uint32_t> star_sym_of;
    uint32_t n_rows = 0, n_cols = 0, n_syms = 0;
};

struct GroupBitrade {
    Bitrade bitrade;
    CosetLabelling labels;
};

// The coset construction; requires construction_ready() and throws
// std::invalid_argument otherwise.
GroupBitrade group_based_bitrade(const TriadSpec& spec);

/**
 * Checks everything the construction promises for a triad: the pair is a
 * valid bitrade of size |G| with |G:A| rows of |A| entries each (and the
 * column/symbol analogues), and is primary whenever <a,b,c> = G. The primary
 * check is skipped (reported "capped") above primary_cap.
 */
VerifierReport verify_group_construction(const TriadSpec& spec, uint64_t primary_cap = 24);

// All (a, b, c = (ab)^-1) triads of g meeting the construction conditions.
std::vector<TriadSpec> construction_triads(const CayleyGroup& g);

} // namespace lbt
