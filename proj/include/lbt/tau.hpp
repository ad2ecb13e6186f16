// tau.hpp -- the permutation representation of a bitrade: the three beta
// bijections between the sides, the tau permutations they induce on the circ
// entries, cycle structure, separatedness, and genus.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lbt/perm.hpp"
#include "lbt/pls.hpp"

namespace lbt {

/**
 * tau1 = beta2^-1 beta3, tau2 = beta3^-1 beta1, tau3 = beta1^-1 beta2, all
 * acting on the circ entries in their row-major numbering (left-to-right
 * composition). Every cycle of tau1 stays inside one row, of tau2 inside one
 * column, of tau3 inside one symbol; tau1*tau2*tau3 is the identity.
 *
 * Values of this type produced by compute_tau satisfy those invariants;
 * check_tau_axioms exists to test arbitrary triples.
 */
struct TauRepresentation {
    uint32_t m = 0;
    Permutation tau1, tau2, tau3;
    // star entry ordinal -> circ entry ordinal; beta_r changes coordinate r only
    std::vector<uint32_t> beta1, beta2, beta3;
    std::vector<std::vector<uint32_t>> cycles1, cycles2, cycles3;

    // Wraps three permutations of equal degree (betas stay empty).
    static TauRepresentation from_permutations(Permutation t1, Permutation t2,
                                               Permutation t3);

    const Permutation& tau(int i) const;
    const std::vector<std::vector<uint32_t>>& cycles(int i) const;
};

// beta_r as an index map star-ordinal -> circ-ordinal. Throws
// std::invalid_argument naming the offending entry when some entry has zero
// or several partners (i.e. the input is not a valid bitrade).
std::vector<uint32_t> compute_beta(const Bitrade& b, int r);

// Requires a valid nonempty bitrade in which every declared label occurs.
TauRepresentation compute_tau(const Bitrade& b);

struct CycleOverlapWitness {
    int rep_r = 0, rep_s = 0; // which tau the two cycles come from, 1-based
    std::vector<uint32_t> cycle_r, cycle_s;
    std::vector<uint32_t> shared;
};

struct FixedPointWitness {
    int rep = 0;
    uint32_t point = 0;
};

// The three defining properties of a bitrade representation, each reported
// independently with a witness on failure: distinct-representation cycles
// share at most one moved point; no tau has a fixed point; the product
// tau1*tau2*tau3 is the identity.
struct TauAxiomReport {
    std::optional<CycleOverlapWitness> overlap_failure;
    std::optional<FixedPointWitness> fixed_point;
    std::optional<uint32_t> product_moves; // a point moved by tau1*tau2*tau3
    bool overlap_ok() const { return !overlap_failure.has_value(); }
    bool fixed_point_free() const { return !fixed_point.has_value(); }
    bool product_is_identity() const { return !product_moves.has_value(); }
    bool ok() const { return overlap_ok() && fixed_point_free() && product_is_identity(); }
};

TauAxiomReport check_tau_axioms(const TauRepresentation& t);

/**
 * A bitrade is separated when each occupied row, column, and symbol meets
 * exactly one cycle of the corresponding tau. cycle_totals carries z(tau_i);
 * single_cycle_each is the stricter reading in which each tau_i consists of
 * one cycle overall, exposed as a diagnostic only.
 */
struct SeparatedReport {
    bool separated = false;
    std::vector<uint32_t> row_cycles, col_cycles, sym_cycles;
    std::array<uint32_t, 3> cycle_totals{0, 0, 0};
    bool single_cycle_each = false;
};

SeparatedReport is_separated(const Bitrade& b);

// Orbits of the circ entries under <tau1, tau2>; one orbit means the bitrade
// is connected (equivalently, primary).
std::vector<std::vector<uint32_t>> entry_orbits(const TauRepresentation& t);

/**
 * Genus from the cycle counts: 2 - 2g = z(tau1) + z(tau2) + z(tau3) - |circ|.
 * Defined only for separated, connected bitrades; refused otherwise.
 * orbit_genera lists the genus of each connected component regardless.
 */
struct GenusResult {
    enum class Status { ok, not_separated, disconnected, non_integer };
    Status status = Status::ok;
    int64_t genus = 0;     // meaningful when status == ok
    int64_t euler_lhs = 0; // z1 + z2 + z3 - m, i.e. 2 - 2g
    std::array<uint32_t, 3> cycle_totals{0, 0, 0};
    std::vector<int64_t> orbit_genera;
    bool ok() const { return status == Status::ok; }
};

GenusResult genus(const Bitrade& b);

} // namespace lbt
