// pls.hpp -- triples, partial latin squares, bitrades, and isotopisms
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lbt/caps.hpp"
#include "lbt/perm.hpp"

namespace lbt {

struct Triple {
    uint32_t row = 0, col = 0, sym = 0;
    auto operator<=>(const Triple&) const = default;
};

/**
 * A partial latin square: a set of (row, col, sym) triples in which no two
 * entries agree in two coordinates. Entries are kept sorted row-major, which
 * fixes the entry numbering used by every downstream permutation.
 *
 * The constructor stores whatever it is given (deduplicated); whether the
 * functional constraints actually hold is validate_pls's business, so that
 * violations can be reported rather than thrown.
 */
class PartialLatinSquare {
public:
    PartialLatinSquare(uint32_t n_rows, uint32_t n_cols, uint32_t n_syms,
                       std::vector<Triple> entries);

    uint32_t n_rows() const { return n_rows_; }
    uint32_t n_cols() const { return n_cols_; }
    uint32_t n_syms() const { return n_syms_; }
    const std::vector<Triple>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }

    // Ordinal of a triple in the row-major entry ordering.
    std::optional<uint32_t> index_of(const Triple& t) const;
    std::optional<uint32_t> sym_at(uint32_t row, uint32_t col) const;
    bool cell_occupied(uint32_t row, uint32_t col) const;

    // True when every declared row, column, and symbol label occurs in some
    // entry. Operations built on the entry permutations require this.
    bool all_labels_used() const;

    bool operator==(const PartialLatinSquare&) const = default;

private:
    uint32_t n_rows_, n_cols_, n_syms_;
    std::vector<Triple> entries_;
};

struct PlsViolation {
    enum class Kind { out_of_range, repeated_row_sym, repeated_col_sym, repeated_cell };
    Kind kind;
    Triple a, b; // the offending entry (and its partner, for repeats)
};

struct PlsReport {
    std::vector<PlsViolation> violations;
    bool ok() const { return violations.empty(); }
};

PlsReport validate_pls(const PartialLatinSquare& p);

/**
 * An ordered pair of partial latin squares over the same label sets. The
 * intended invariants (disjointness plus unique two-coordinate partners on
 * the opposite side, in both directions) are checked by validate_bitrade.
 */
class Bitrade {
public:
    Bitrade(PartialLatinSquare t_circ, PartialLatinSquare t_star);

    const PartialLatinSquare& circ() const { return circ_; }
    const PartialLatinSquare& star() const { return star_; }
    size_t size() const { return circ_.size(); }

    bool operator==(const Bitrade&) const = default;

private:
    PartialLatinSquare circ_, star_;
};

struct PartnerViolation {
    int from_side;  // 0 = circ entry missing partners in star, 1 = the reverse
    Triple entry;
    int coord_r, coord_s; // 1-based coordinate pair the partner must match
    uint32_t partner_count; // 0 or >= 2
};

struct BitradeReport {
    PlsReport circ, star;
    std::vector<Triple> overlap;               // entries present on both sides
    std::vector<PartnerViolation> partner_failures;
    bool ok() const {
        return circ.ok() && star.ok() && overlap.empty() && partner_failures.empty();
    }
};

BitradeReport validate_bitrade(const Bitrade& b);

/**
 * A triple of label bijections (rows, columns, symbols). Composition is
 * componentwise and left-to-right, matching Permutation.
 */
struct Isotopism {
    Permutation rows, cols, syms;

    static Isotopism identity(uint32_t n_rows, uint32_t n_cols, uint32_t n_syms);
    Isotopism inverse() const;
    Isotopism operator*(const Isotopism& rhs) const;
    Triple apply(const Triple& t) const;
    bool is_identity() const;

    auto operator<=>(const Isotopism&) const = default;
};

// {(r.rows, c.cols, s.syms)}; throws std::invalid_argument on degree mismatch.
PartialLatinSquare apply_isotopism(const PartialLatinSquare& p, const Isotopism& g);
Bitrade apply_isotopism(const Bitrade& b, const Isotopism& g);

enum class SearchOutcome { found, exhausted, budget_exceeded };

struct IsotopyResult {
    SearchOutcome outcome = SearchOutcome::exhausted;
    std::optional<Isotopism> witness;
    uint64_t nodes = 0;
};

/**
 * Searches for an isotopism p -> q. Deterministic: row images are assigned in
 * natural row order with candidates ascending, then column images likewise
 * (symbol images are forced cell by cell), so the witness returned is the
 * lexicographically least one under that ordering. The node budget in `caps`
 * makes "budget exceeded" a distinct outcome from "not isotopic".
 */
IsotopyResult are_isotopic(const PartialLatinSquare& p, const PartialLatinSquare& q,
                           const SearchCaps& caps = {});

enum class BitradeIsotopyMode {
    simultaneous, // one isotopism mapping circ -> circ and star -> star
    independent   // separate witnesses per side
};

struct BitradeIsotopyResult {
    SearchOutcome outcome = SearchOutcome::exhausted;
    std::optional<Isotopism> circ_witness;
    std::optional<Isotopism> star_witness; // equals circ_witness in simultaneous mode
    uint64_t nodes = 0;
};

BitradeIsotopyResult are_isotopic_bitrades(const Bitrade& b1, const Bitrade& b2,
                                           BitradeIsotopyMode mode = BitradeIsotopyMode::simultaneous,
                                           const SearchCaps& caps = {});

} // namespace lbt
