// verify.hpp -- executable checks for the structural theorems: every verifier
// evaluates its hypotheses honestly and only asserts conclusions when they
// hold, so a sweep can tell falsification from vacuity.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lbt/analysis.hpp"
#include "lbt/cayley.hpp"
#include "lbt/groups.hpp"
#include "lbt/pls.hpp"
#include "lbt/report.hpp"
#include "lbt/tau.hpp"

namespace lbt {

// The three representation properties (cycle overlap, fixed-point-freeness,
// identity product) plus row/column/symbol confinement of the cycles.
VerifierReport verify_tau_axioms(const Bitrade& b);

/**
 * The reconstruction theorem, run as a computation: for a primary, thin,
 * separated bitrade whose circ stabilizer acts regularly on the circ
 * entries, (1) the local configuration at a base entry singles out unique
 * autotopisms nu1, nu2, nu3; (2) nu1*nu2*nu3 = 1 and their entry actions are
 * fixed-point-free with pairwise cycle overlaps of at most one point;
 * (3) the nu entry actions coincide with tau1, tau2, tau3; (4) the coset
 * construction over the stabilizer, with the cyclic subgroups of the nus,
 * reproduces the bitrade up to one simultaneous isotopism (exhibited).
 */
VerifierReport verify_regular_bitrade_reconstruction(const Bitrade& b,
                                                     const SearchCaps& caps = {});

/**
 * Genus-0 mate uniqueness: among all disjoint mates of `t`, exactly one
 * yields a separated bitrade of genus 0 (provided at least one does).
 */
VerifierReport verify_genus0_mate_uniqueness(const PartialLatinSquare& t,
                                             const SearchCaps& caps = {},
                                             size_t mate_limit = 10000);

// For a separated genus-0 bitrade the two sides have the same stabilizer,
// as element sets, not merely isomorphic groups.
VerifierReport verify_genus0_autotopism_equality(const Bitrade& b,
                                                 const SearchCaps& caps = {});

/**
 * The centralizer embedding: every permutation commuting with the taus of a
 * separated bitrade permutes the cycles of each tau, hence acts on rows,
 * columns, and symbols; that block action is an autotopism of both sides and
 * the assignment is an injective homomorphism whose entry action recovers
 * the original permutation. Whether the image is all of the two-sided
 * stabilizer is reported as information (it need not be).
 */
struct TauEmbedding {
    bool defined = false;
    std::string failure; // why the block action broke, when !defined
    std::vector<Isotopism> images; // aligned with the centralizer's elements()
};

TauEmbedding build_tau_embedding(const Bitrade& b, const TauRepresentation& tau,
                                 const PermGroup& tau_aut);

VerifierReport embed_tau_automorphisms(const Bitrade& b, const SearchCaps& caps = {});

/**
 * When the circ stabilizer is regular and the tau centralizer is transitive,
 * the two groups are isomorphic: the centralizer has exactly |circ| elements
 * and the embedding maps it onto the circ stabilizer.
 */
VerifierReport verify_atop_tau_isomorphism(const Bitrade& b, const SearchCaps& caps = {});

/**
 * Constellation axioms (identity product, transitive cartographic group) and
 * the transitivity equivalence: the centralizer is transitive iff its order
 * equals the degree, and in that case the points biject with the cartographic
 * group, which acts by right multiplication while the centralizer acts by
 * left multiplication -- exhibited elementwise.
 */
VerifierReport constellation_checks(const Constellation& c, const SearchCaps& caps = {});

// Right and left regular representations centralize each other, elementwise
// and as full centralizers in the symmetric group.
VerifierReport verify_regular_representation_centralizer(const CayleyGroup& g,
                                                         const SearchCaps& caps = {});

} // namespace lbt
