// catalog.hpp -- built-in groups: every group of order <= 16, plus S4
#pragma once

#include <cstdint>
#include <vector>

#include "lbt/cayley.hpp"

namespace lbt {
namespace catalog {

CayleyGroup cyclic(uint32_t n);
CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b);

// <r,s | r^n = 1, s^2 = r^e, s^-1 r s = r^t>, order 2n. Covers the dihedral
// (e=0, t=n-1), dicyclic/quaternion (e=n/2, t=n-1), semidihedral (n=8, t=3)
// and modular (n=8, t=5) families.
CayleyGroup two_generator(uint32_t n, uint32_t e, uint32_t t, const std::string& name);

CayleyGroup dihedral(uint32_t n);   // order 2n
CayleyGroup quaternion8();
CayleyGroup quaternion16();
CayleyGroup semidihedral16();
CayleyGroup modular16();
CayleyGroup dicyclic12();

CayleyGroup c4_semidirect_c4();     // <a,b | a^4, b^4, b^-1 a b = a^-1>
CayleyGroup c2c2_semidirect_c4();   // C4 swapping the two C2 factors
CayleyGroup pauli16();              // central product of D4 and C4

CayleyGroup alternating4();
CayleyGroup symmetric(uint32_t n);  // small n only

// All groups of order <= max_order (max_order <= 16), one representative per
// isomorphism class, in a fixed deterministic order.
std::vector<CayleyGroup> all_groups_up_to(uint32_t max_order);

} // namespace catalog
} // namespace lbt
