// io.hpp -- file formats, label bookkeeping, JSON reports, fixture sweeps
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lbt/analysis.hpp"
#include "lbt/cayley.hpp"
#include "lbt/pls.hpp"
#include "lbt/report.hpp"

namespace lbt {

enum class DocFormat { grid_pls, grid_bitrade, triples_pls, triples_bitrade, cayley, constellation };

const char* to_string(DocFormat f);

// Original labels per canonical index; empty for documents without labels.
struct LabelMap {
    std::vector<std::string> rows, cols, syms;
};

/**
 * A parsed input file. Formats:
 *
 *   grid           "rows=R cols=C syms=S" header, then R lines of C symbol
 *                  tokens ('-' marks an empty cell); a line "---" separates
 *                  the two sides of a bitrade. Symbol tokens may be numeric
 *                  (used directly as indices) or arbitrary words (mapped in
 *                  sorted order, in which case all S must occur).
 *   triples        one "row col sym" line per entry, sides separated by
 *                  "---"; labels are arbitrary tokens, canonicalized to
 *                  0-based indices in sorted order (numeric sort when every
 *                  token of a coordinate is a number).
 *   cayley         first line the order n, then n rows of n element indices;
 *                  index 0 must be the identity.
 *   constellation  first line "degree k", then k permutations in
 *                  disjoint-cycle notation, one per line.
 *
 * '#' starts a comment anywhere; blank lines are ignored. Parsing and
 * printing round-trip exactly.
 */
struct Document {
    DocFormat format = DocFormat::grid_pls;
    std::string source;
    LabelMap labels;
    std::optional<PartialLatinSquare> pls;
    std::optional<Bitrade> bitrade;
    std::optional<CayleyGroup> cayley;
    std::optional<Constellation> constellation;
};

// Throws std::invalid_argument with a line-numbered message on bad input.
Document parse_document(const std::string& text, const std::string& source_name);
Document load_document(const std::string& path);
std::string print_document(const Document& doc);

// Cycle notation over original labels, e.g. "(a,b)(d,f)".
std::string cycle_string_with_labels(const Permutation& p,
                                     const std::vector<std::string>& labels);
std::string isotopism_string(const Isotopism& g, const LabelMap& labels);

nlohmann::ordered_json report_to_json(const VerifierReport& report);

struct SweepOptions {
    SearchCaps caps;
    uint64_t seed = 0; // shuffles execution order only; output is order-free
    size_t mate_limit = 10000;
    bool parallel = true;
};

struct SweepRow {
    std::string fixture;
    std::string operation;
    ClaimStatus status = ClaimStatus::pass;
    std::string detail;
};

struct SweepResult {
    std::vector<SweepRow> rows; // sorted by (fixture, operation)
    bool any_fail = false;

    nlohmann::ordered_json to_json() const;
    std::string to_table() const;
};

// Runs every applicable verifier over each fixture file in `dir` (sorted by
// filename). Unreadable or unparsable fixtures yield a failing "parse" row.
SweepResult run_sweep(const std::string& dir, const SweepOptions& options = {});

// The reports behind one fixture document, named operations included.
std::vector<VerifierReport> verify_document(const Document& doc,
                                            const SweepOptions& options = {});

} // namespace lbt
