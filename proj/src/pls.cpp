#include "lbt/pls.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "isotopy_search.hpp"

namespace lbt {

PartialLatinSquare::PartialLatinSquare(uint32_t n_rows, uint32_t n_cols, uint32_t n_syms,
                                       std::vector<Triple> entries)
    : n_rows_(n_rows), n_cols_(n_cols), n_syms_(n_syms), entries_(std::move(entries)) {
    if (n_rows_ == 0 || n_cols_ == 0 || n_syms_ == 0)
        throw std::invalid_argument("label-set sizes must be positive");
    std::sort(entries_.begin(), entries_.end());
    entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
}

std::optional<uint32_t> PartialLatinSquare::index_of(const Triple& t) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), t);
    if (it == entries_.end() || *it != t) return std::nullopt;
    return static_cast<uint32_t>(it - entries_.begin());
}

std::optional<uint32_t> PartialLatinSquare::sym_at(uint32_t row, uint32_t col) const {
    Triple probe{row, col, 0};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), probe);
    if (it != entries_.end() && it->row == row && it->col == col) return it->sym;
    return std::nullopt;
}

bool PartialLatinSquare::cell_occupied(uint32_t row, uint32_t col) const {
    return sym_at(row, col).has_value();
}

bool PartialLatinSquare::all_labels_used() const {
    std::vector<bool> r(n_rows_, false), c(n_cols_, false), s(n_syms_, false);
    for (const auto& t : entries_) {
        if (t.row >= n_rows_ || t.col >= n_cols_ || t.sym >= n_syms_) return false;
        r[t.row] = c[t.col] = s[t.sym] = true;
    }
    auto all = [](const std::vector<bool>& v) {
        return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    };
    return all(r) && all(c) && all(s);
}

PlsReport validate_pls(const PartialLatinSquare& p) {
    PlsReport report;
    std::map<std::pair<uint32_t, uint32_t>, Triple> by_cell, by_row_sym, by_col_sym;
    for (const auto& t : p.entries()) {
        if (t.row >= p.n_rows() || t.col >= p.n_cols() || t.sym >= p.n_syms()) {
            report.violations.push_back({PlsViolation::Kind::out_of_range, t, t});
            continue;
        }
        if (auto [it, fresh] = by_cell.try_emplace({t.row, t.col}, t); !fresh)
            report.violations.push_back({PlsViolation::Kind::repeated_cell, it->second, t});
        if (auto [it, fresh] = by_row_sym.try_emplace({t.row, t.sym}, t); !fresh)
            report.violations.push_back({PlsViolation::Kind::repeated_row_sym, it->second, t});
        if (auto [it, fresh] = by_col_sym.try_emplace({t.col, t.sym}, t); !fresh)
            report.violations.push_back({PlsViolation::Kind::repeated_col_sym, it->second, t});
    }
    return report;
}

Bitrade::Bitrade(PartialLatinSquare t_circ, PartialLatinSquare t_star)
    : circ_(std::move(t_circ)), star_(std::move(t_star)) {
    if (circ_.n_rows() != star_.n_rows() || circ_.n_cols() != star_.n_cols() ||
        circ_.n_syms() != star_.n_syms())
        throw std::invalid_argument("bitrade sides must share label-set sizes");
}

namespace {

// Counts entries of `side` agreeing with `t` in the two coordinates picked
// out by (r, s), 1-based.
uint32_t partner_count(const PartialLatinSquare& side, const Triple& t, int r, int s) {
    auto coord = [](const Triple& x, int i) -> uint32_t {
        return i == 1 ? x.row : (i == 2 ? x.col : x.sym);
    };
    uint32_t count = 0;
    for (const auto& u : side.entries())
        if (coord(u, r) == coord(t, r) && coord(u, s) == coord(t, s)) ++count;
    return count;
}

} // namespace

BitradeReport validate_bitrade(const Bitrade& b) {
    BitradeReport report;
    report.circ = validate_pls(b.circ());
    report.star = validate_pls(b.star());
    std::set_intersection(b.circ().entries().begin(), b.circ().entries().end(),
                          b.star().entries().begin(), b.star().entries().end(),
                          std::back_inserter(report.overlap));
    const std::pair<int, int> pairs[] = {{1, 2}, {1, 3}, {2, 3}};
    for (int side = 0; side < 2; ++side) {
        const auto& from = side == 0 ? b.circ() : b.star();
        const auto& to = side == 0 ? b.star() : b.circ();
        for (const auto& t : from.entries())
            for (auto [r, s] : pairs) {
                uint32_t n = partner_count(to, t, r, s);
                if (n != 1) report.partner_failures.push_back({side, t, r, s, n});
            }
    }
    return report;
}

Isotopism Isotopism::identity(uint32_t n_rows, uint32_t n_cols, uint32_t n_syms) {
    return {Permutation::identity(n_rows), Permutation::identity(n_cols),
            Permutation::identity(n_syms)};
}

Isotopism Isotopism::inverse() const {
    return {rows.inverse(), cols.inverse(), syms.inverse()};
}

Isotopism Isotopism::operator*(const Isotopism& rhs) const {
    return {rows * rhs.rows, cols * rhs.cols, syms * rhs.syms};
}

Triple Isotopism::apply(const Triple& t) const {
    return {rows[t.row], cols[t.col], syms[t.sym]};
}

bool Isotopism::is_identity() const {
    return rows.is_identity() && cols.is_identity() && syms.is_identity();
}

PartialLatinSquare apply_isotopism(const PartialLatinSquare& p, const Isotopism& g) {
    if (g.rows.degree() != p.n_rows() || g.cols.degree() != p.n_cols() ||
        g.syms.degree() != p.n_syms())
        throw std::invalid_argument("isotopism degrees do not match label-set sizes");
    std::vector<Triple> mapped;
    mapped.reserve(p.size());
    for (const auto& t : p.entries()) mapped.push_back(g.apply(t));
    return {p.n_rows(), p.n_cols(), p.n_syms(), std::move(mapped)};
}

Bitrade apply_isotopism(const Bitrade& b, const Isotopism& g) {
    return {apply_isotopism(b.circ(), g), apply_isotopism(b.star(), g)};
}

IsotopyResult are_isotopic(const PartialLatinSquare& p, const PartialLatinSquare& q,
                           const SearchCaps& caps) {
    IsotopyResult result;
    if (p.n_rows() != q.n_rows() || p.n_cols() != q.n_cols() || p.n_syms() != q.n_syms())
        return result;
    if (p.size() != q.size()) return result;
    try {
        detail::IsotopySearch search(p, q, nullptr, nullptr, caps);
        std::vector<Isotopism> witnesses;
        result.outcome = search.run(witnesses, /*first_only=*/true);
        result.nodes = search.nodes();
        if (!witnesses.empty()) result.witness = witnesses.front();
    } catch (const cap_exceeded&) {
        // a blown degree cap is reported like a blown node budget: the
        // search was cut short, which is distinct from "not isotopic"
        result.outcome = SearchOutcome::budget_exceeded;
    }
    return result;
}

BitradeIsotopyResult are_isotopic_bitrades(const Bitrade& b1, const Bitrade& b2,
                                           BitradeIsotopyMode mode, const SearchCaps& caps) {
    BitradeIsotopyResult result;
    if (b1.circ().n_rows() != b2.circ().n_rows() ||
        b1.circ().n_cols() != b2.circ().n_cols() ||
        b1.circ().n_syms() != b2.circ().n_syms())
        return result;
    if (b1.circ().size() != b2.circ().size() || b1.star().size() != b2.star().size())
        return result;
    if (mode == BitradeIsotopyMode::simultaneous) {
        try {
            detail::IsotopySearch search(b1.circ(), b2.circ(), &b1.star(), &b2.star(), caps);
            std::vector<Isotopism> witnesses;
            result.outcome = search.run(witnesses, /*first_only=*/true);
            result.nodes = search.nodes();
            if (!witnesses.empty()) {
                result.circ_witness = witnesses.front();
                result.star_witness = witnesses.front();
            }
        } catch (const cap_exceeded&) {
            result.outcome = SearchOutcome::budget_exceeded;
        }
        return result;
    }
    IsotopyResult circ = are_isotopic(b1.circ(), b2.circ(), caps);
    result.nodes = circ.nodes;
    if (circ.outcome != SearchOutcome::found) {
        result.outcome = circ.outcome;
        return result;
    }
    IsotopyResult star = are_isotopic(b1.star(), b2.star(), caps);
    result.nodes += star.nodes;
    result.outcome = star.outcome;
    if (star.outcome == SearchOutcome::found) {
        result.circ_witness = circ.witness;
        result.star_witness = star.witness;
    }
    return result;
}

} // namespace lbt
