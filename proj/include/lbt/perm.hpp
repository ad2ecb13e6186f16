// perm.hpp -- permutations of {0..n-1}, finitely generated groups, actions,
// and centralizers in the full symmetric group.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lbt/caps.hpp"

namespace lbt {

/**
 * A permutation of {0..degree-1}, stored as its image array.
 *
 * Composition is left-to-right everywhere in this library: `a * b` means
 * "apply a, then b", so (a*b)[x] == b[a[x]]. All permutation identities
 * (e.g. tau1*tau2*tau3 == id) are stated under this convention.
 */
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<uint32_t> images);

    static Permutation identity(uint32_t degree);
    // Parses disjoint-cycle notation, e.g. "(0,1,2)(3,4)"; "()" is the identity.
    static Permutation from_cycles(const std::string& text, uint32_t degree);

    uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
    uint32_t operator[](uint32_t x) const { return img_[x]; }
    bool is_identity() const;

    Permutation operator*(const Permutation& rhs) const; // this, then rhs
    Permutation inverse() const;
    uint64_t order() const;
    Permutation power(int64_t k) const;

    // Nontrivial cycles; each starts at its least point, cycles sorted by
    // least point. Fixed points are omitted.
    std::vector<std::vector<uint32_t>> cycles() const;
    std::string cycle_string() const; // "(0,1,2)(3,4)"; identity prints "()"

    std::vector<uint32_t> moved_points() const;

    const std::vector<uint32_t>& images() const { return img_; }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<uint32_t> img_;
};

// Orbits of the group generated by `gens` on {0..degree-1}, sorted by least
// point; every orbit is sorted ascending.
std::vector<std::vector<uint32_t>> orbits_of(const std::vector<Permutation>& gens,
                                             uint32_t degree);

/**
 * A permutation group held as generators plus its fully enumerated element
 * set. Enumeration is breadth-first closure with a hard cap; there is no
 * stabilizer-chain machinery here, everything stays desk scale and auditable.
 */
class PermGroup {
public:
    // Closure of `gens`; throws cap_exceeded when the element count passes the cap.
    static PermGroup closure(uint32_t degree, std::vector<Permutation> gens,
                             uint64_t element_cap = SearchCaps{}.max_group_elements);

    // Wraps an element list that is already known to be a group; verifies
    // identity membership and closure under products with a reduced
    // generating set.
    static PermGroup from_elements(uint32_t degree, std::vector<Permutation> elements);

    static PermGroup trivial(uint32_t degree);

    uint32_t degree() const { return degree_; }
    uint64_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    bool contains(const Permutation& p) const;
    bool is_abelian() const;
    std::vector<std::vector<uint32_t>> orbits() const;
    bool is_transitive() const;

    bool same_element_set(const PermGroup& other) const;

private:
    PermGroup(uint32_t degree, std::vector<Permutation> gens,
              std::vector<Permutation> elements);

    uint32_t degree_ = 0;
    std::vector<Permutation> gens_;     // reduced, deterministic
    std::vector<Permutation> elements_; // sorted lexicographically, identity first
};

// Greedy reduction of an element list to a small deterministic generating set.
std::vector<Permutation> reduce_generators(uint32_t degree,
                                           const std::vector<Permutation>& elements);

/**
 * Full centralizer, in the symmetric group on `degree` points, of the group
 * generated by `gens` -- which is never enumerated itself, so the generated
 * group may be arbitrarily large. A centralizing permutation is determined by
 * the image of one base point per orbit: the image spreads along the orbit's
 * Schreier tree and is kept only if it commutes with every generator at every
 * point of the orbit. Nothing factorial is ever scanned. The cap bounds the
 * number of centralizer elements collected.
 */
PermGroup centralizer_in_sym(uint32_t degree, const std::vector<Permutation>& gens,
                             uint64_t element_cap = SearchCaps{}.max_group_elements);
PermGroup centralizer_in_sym(const PermGroup& g,
                             uint64_t element_cap = SearchCaps{}.max_group_elements);

/**
 * A group acting on {0..point_count-1}: point_images[i] is how elements()[i]
 * acts. The identity must act trivially and the action must respect products.
 */
struct GroupAction {
    PermGroup group = PermGroup::trivial(0);
    uint32_t point_count = 0;
    std::vector<Permutation> point_images;

    static GroupAction natural(const PermGroup& g);

    bool respects_products() const;
};

bool is_transitive_action(const GroupAction& a);

// True iff for every ordered pair of points exactly one element maps the
// first to the second. Computed by direct counting and cross-checked against
// the equivalent "transitive and |G| == |X|" route; a disagreement between
// the two routes throws std::logic_error.
bool is_regular_action(const GroupAction& a);

} // namespace lbt
