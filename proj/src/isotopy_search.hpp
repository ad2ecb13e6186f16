// isotopy_search.hpp -- internal backtracking engine behind are_isotopic and
// the autotopism-group searches.
#pragma once

#include <cstdint>
#include <vector>

#include "lbt/caps.hpp"
#include "lbt/pls.hpp"

namespace lbt {
namespace detail {

/**
 * Searches for isotopisms mapping one partial latin square onto another
 * (optionally a second pair simultaneously, for bitrades).
 *
 * Phase one assigns row images in natural row order, maintaining for every
 * column a bitmask of still-possible column images; a mask is narrowed each
 * time a row image is fixed, using occupancy and symbol-frequency-class
 * compatibility. Phase two assigns column images in natural column order,
 * forcing symbol images cell by cell. Candidates are always tried ascending,
 * so the first witness found is the lexicographically least under
 * (row images, column images, symbol images with unused symbols filled
 * ascending).
 */
class IsotopySearch {
public:
    IsotopySearch(const PartialLatinSquare& from, const PartialLatinSquare& to,
                  const PartialLatinSquare* from_star, const PartialLatinSquare* to_star,
                  const SearchCaps& caps);

    // Collects witnesses into `out` (just the first one when first_only).
    // Returns found/exhausted/budget_exceeded; found means out is nonempty.
    SearchOutcome run(std::vector<Isotopism>& out, bool first_only);

    uint64_t nodes() const { return nodes_; }

private:
    struct Side {
        const PartialLatinSquare* from;
        const PartialLatinSquare* to;
        std::vector<std::vector<int64_t>> from_cell, to_cell; // sym or -1
        std::vector<uint32_t> from_sym_freq, to_sym_freq;
    };

    bool row_signature_match(uint32_t r, uint32_t rr) const;
    uint64_t column_mask_update(const Side& s, uint32_t r, uint32_t rr, uint32_t c) const;

    void search_rows(uint32_t r);
    void search_cols(uint32_t c);
    void emit();
    void bump_nodes();

    std::vector<Side> sides_;
    uint32_t n_rows_, n_cols_, n_syms_;
    SearchCaps caps_;

    std::vector<uint32_t> row_img_, col_img_, sym_img_, sym_img_inv_;
    std::vector<bool> row_used_, col_used_;
    static constexpr uint32_t kUnset = UINT32_MAX;
    std::vector<std::vector<uint64_t>> col_masks_; // one vector per assigned-row depth

    std::vector<Isotopism>* out_ = nullptr;
    bool first_only_ = false;
    bool done_ = false;
    bool budget_hit_ = false;
    uint64_t nodes_ = 0;
};

} // namespace detail
} // namespace lbt
