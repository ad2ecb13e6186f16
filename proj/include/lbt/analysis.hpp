// analysis.hpp -- classification of bitrades (thin, primary), disjoint-mate
// enumeration, autotopism groups and their actions, and constellations.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lbt/caps.hpp"
#include "lbt/perm.hpp"
#include "lbt/pls.hpp"
#include "lbt/tau.hpp"

namespace lbt {

/**
 * Thinness: whenever two circ entries in distinct rows and columns carry the
 * same symbol k, the star side's cell at (first row, second column) is empty
 * or carries k. A thin bitrade's disjoint mate is unique.
 */
struct ThinResult {
    bool thin = false;
    // the violating configuration: entries (i,j,k) and (i',j',k) of circ with
    // star cell (i,j') holding something other than k
    std::optional<std::pair<Triple, Triple>> counterexample;
    std::optional<uint32_t> star_sym; // what (i,j') holds instead
};

ThinResult is_thin(const Bitrade& b);

/**
 * All partial latin squares on the same cell set as `t`, cellwise disjoint
 * from it, with the same symbol set in every row and every column -- exactly
 * the mates making the pair a bitrade. Backtracks over cells row-major with
 * symbols ascending, so the output order is deterministic; stops after
 * `limit` mates and says so.
 */
struct MateEnumeration {
    std::vector<PartialLatinSquare> mates;
    bool truncated = false;
};

MateEnumeration enumerate_disjoint_mates(const PartialLatinSquare& t, size_t limit = 10000);

/**
 * Primary: no proper nonempty pair of subsets of the two sides is itself a
 * bitrade. For a validated bitrade the partner of any entry inside a
 * sub-bitrade is forced (partners are already unique in the whole bitrade),
 * so closing a single seed entry under the three partner maps decides the
 * question exactly: the bitrade is primary iff the closure of one entry is
 * everything. The closure is the orbit of the seed under <tau1, tau2>.
 */
enum class PrimaryStatus { primary, not_primary, unknown };

struct PrimaryResult {
    PrimaryStatus status = PrimaryStatus::unknown;
    std::optional<Bitrade> witness; // a proper nonempty sub-bitrade
    uint64_t nodes = 0;
};

PrimaryResult is_primary(const Bitrade& b, uint64_t cap = SearchCaps{}.max_nodes);

/**
 * The stabilizer of a partial latin square (or of both sides of a bitrade)
 * under isotopisms, held as a permutation group on the fused point set
 * rows + cols + syms so that the usual group machinery applies.
 */
enum class StabilizedSide { circ_only, both_sides };

struct AutotopismGroup {
    uint32_t n_rows = 0, n_cols = 0, n_syms = 0;
    StabilizedSide stabilizes = StabilizedSide::circ_only;
    PermGroup fused = PermGroup::trivial(0);

    uint64_t order() const { return fused.order(); }
    Isotopism isotopism_of(const Permutation& fused_element) const;
    Permutation fuse(const Isotopism& g) const;
    std::vector<Isotopism> elements() const;
    bool contains(const Isotopism& g) const;
};

// Every declared label must be used (otherwise unused labels would act
// freely and inflate the group); throws std::invalid_argument if not, and
// cap_exceeded past the caps.
AutotopismGroup autotopism_group(const PartialLatinSquare& t, const SearchCaps& caps = {});
AutotopismGroup autotopism_group_bitrade(const Bitrade& b, const SearchCaps& caps = {});

// How an autotopism moves the entries of `t`; nullopt when g does not
// stabilize t. Injective whenever every label is used.
std::optional<Permutation> entry_action_of(const PartialLatinSquare& t, const Isotopism& g);

// The action of an autotopism group on the entries of `t`.
GroupAction entry_action(const AutotopismGroup& g, const PartialLatinSquare& t);

// Both halves of the transitivity definition, each checked on its own side.
bool is_transitive_bitrade(const Bitrade& b, const SearchCaps& caps = {});

// Whether the circ stabilizer acts regularly on the circ entries.
bool is_regular_autotopism_action(const PartialLatinSquare& t, const SearchCaps& caps = {});

// Centralizer of <tau1, tau2, tau3> in the symmetric group on the entries.
PermGroup tau_automorphism_group(const TauRepresentation& t,
                                 uint64_t element_cap = SearchCaps{}.max_group_elements);

/**
 * A sequence of permutations whose product is the identity and whose
 * generated (cartographic) group is transitive. A bitrade representation is
 * the length-3 case.
 */
struct Constellation {
    uint32_t degree = 0;
    std::vector<Permutation> maps;
};

} // namespace lbt
