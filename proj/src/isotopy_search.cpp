#include "isotopy_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace lbt {
namespace detail {

IsotopySearch::IsotopySearch(const PartialLatinSquare& from, const PartialLatinSquare& to,
                             const PartialLatinSquare* from_star,
                             const PartialLatinSquare* to_star, const SearchCaps& caps)
    : n_rows_(from.n_rows()), n_cols_(from.n_cols()), n_syms_(from.n_syms()), caps_(caps) {
    if (n_rows_ > caps.max_degree || n_cols_ > caps.max_degree || n_syms_ > caps.max_degree)
        throw cap_exceeded("label-set size exceeds the degree cap of " +
                           std::to_string(caps.max_degree));
    if (n_rows_ > 64 || n_cols_ > 64 || n_syms_ > 64)
        throw cap_exceeded("isotopy search supports at most 64 labels per coordinate");

    auto make_side = [&](const PartialLatinSquare* f, const PartialLatinSquare* t) {
        Side s;
        s.from = f;
        s.to = t;
        s.from_cell.assign(n_rows_, std::vector<int64_t>(n_cols_, -1));
        s.to_cell.assign(n_rows_, std::vector<int64_t>(n_cols_, -1));
        s.from_sym_freq.assign(n_syms_, 0);
        s.to_sym_freq.assign(n_syms_, 0);
        for (const auto& e : f->entries()) {
            s.from_cell[e.row][e.col] = e.sym;
            ++s.from_sym_freq[e.sym];
        }
        for (const auto& e : t->entries()) {
            s.to_cell[e.row][e.col] = e.sym;
            ++s.to_sym_freq[e.sym];
        }
        return s;
    };
    sides_.push_back(make_side(&from, &to));
    if (from_star) sides_.push_back(make_side(from_star, to_star));

    row_img_.assign(n_rows_, kUnset);
    col_img_.assign(n_cols_, kUnset);
    sym_img_.assign(n_syms_, kUnset);
    sym_img_inv_.assign(n_syms_, kUnset);
    row_used_.assign(n_rows_, false);
    col_used_.assign(n_cols_, false);
    col_masks_.assign(n_rows_ + 1, std::vector<uint64_t>(n_cols_, 0));
    uint64_t full = n_cols_ == 64 ? ~0ull : ((1ull << n_cols_) - 1);
    std::fill(col_masks_[0].begin(), col_masks_[0].end(), full);
}

bool IsotopySearch::row_signature_match(uint32_t r, uint32_t rr) const {
    for (const auto& s : sides_) {
        std::vector<uint32_t> a, b;
        for (uint32_t c = 0; c < n_cols_; ++c) {
            if (s.from_cell[r][c] >= 0) a.push_back(s.from_sym_freq[s.from_cell[r][c]]);
            if (s.to_cell[rr][c] >= 0) b.push_back(s.to_sym_freq[s.to_cell[rr][c]]);
        }
        if (a.size() != b.size()) return false;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

uint64_t IsotopySearch::column_mask_update(const Side& s, uint32_t r, uint32_t rr,
                                           uint32_t c) const {
    uint64_t mask = 0;
    int64_t v = s.from_cell[r][c];
    for (uint32_t cc = 0; cc < n_cols_; ++cc) {
        int64_t w = s.to_cell[rr][cc];
        if (v < 0) {
            if (w < 0) mask |= 1ull << cc;
        } else if (w >= 0 && s.from_sym_freq[v] == s.to_sym_freq[w]) {
            mask |= 1ull << cc;
        }
    }
    return mask;
}

void IsotopySearch::bump_nodes() {
    if (++nodes_ > caps_.max_nodes) {
        budget_hit_ = true;
        done_ = true;
    }
}

void IsotopySearch::search_rows(uint32_t r) {
    if (done_) return;
    if (r == n_rows_) {
        search_cols(0);
        return;
    }
    for (uint32_t rr = 0; rr < n_rows_ && !done_; ++rr) {
        if (row_used_[rr]) continue;
        bump_nodes();
        if (done_) return;
        if (!row_signature_match(r, rr)) continue;
        auto& next = col_masks_[r + 1];
        const auto& cur = col_masks_[r];
        bool feasible = true;
        for (uint32_t c = 0; c < n_cols_; ++c) {
            uint64_t m = cur[c];
            for (const auto& s : sides_) m &= column_mask_update(s, r, rr, c);
            next[c] = m;
            if (m == 0) feasible = false;
        }
        if (!feasible) continue;
        row_img_[r] = rr;
        row_used_[rr] = true;
        search_rows(r + 1);
        row_used_[rr] = false;
        row_img_[r] = kUnset;
    }
}

void IsotopySearch::search_cols(uint32_t c) {
    if (done_) return;
    if (c == n_cols_) {
        emit();
        return;
    }
    uint64_t mask = col_masks_[n_rows_][c];
    for (uint32_t cc = 0; cc < n_cols_ && !done_; ++cc) {
        if (!(mask >> cc & 1) || col_used_[cc]) continue;
        bump_nodes();
        if (done_) return;
        // force symbol images along column c, on every side
        std::vector<std::pair<uint32_t, uint32_t>> trail;
        bool ok = true;
        for (const auto& s : sides_) {
            for (uint32_t r = 0; r < n_rows_ && ok; ++r) {
                int64_t v = s.from_cell[r][c];
                if (v < 0) continue;
                int64_t w = s.to_cell[row_img_[r]][cc];
                if (w < 0) {
                    ok = false;
                    break;
                }
                uint32_t sv = static_cast<uint32_t>(v), sw = static_cast<uint32_t>(w);
                if (sym_img_[sv] != kUnset) {
                    if (sym_img_[sv] != sw) ok = false;
                } else if (sym_img_inv_[sw] != kUnset) {
                    ok = false;
                } else {
                    sym_img_[sv] = sw;
                    sym_img_inv_[sw] = sv;
                    trail.emplace_back(sv, sw);
                }
            }
            if (!ok) break;
        }
        if (ok) {
            col_img_[c] = cc;
            col_used_[cc] = true;
            search_cols(c + 1);
            col_used_[cc] = false;
            col_img_[c] = kUnset;
        }
        for (auto [sv, sw] : trail) {
            sym_img_[sv] = kUnset;
            sym_img_inv_[sw] = kUnset;
        }
    }
}

void IsotopySearch::emit() {
    // complete the symbol map: symbols unused on the from side pair up with
    // unused targets, ascending
    std::vector<uint32_t> sym(sym_img_);
    std::vector<uint32_t> free_targets;
    {
        std::vector<bool> taken(n_syms_, false);
        for (uint32_t v : sym)
            if (v != kUnset) taken[v] = true;
        for (uint32_t t = 0; t < n_syms_; ++t)
            if (!taken[t]) free_targets.push_back(t);
        size_t next = 0;
        for (uint32_t s = 0; s < n_syms_; ++s)
            if (sym[s] == kUnset) sym[s] = free_targets[next++];
    }
    Isotopism g{Permutation(std::vector<uint32_t>(row_img_)),
                Permutation(std::vector<uint32_t>(col_img_)),
                Permutation(std::move(sym))};
    for (const auto& s : sides_) {
        if (apply_isotopism(*s.from, g).entries() != s.to->entries())
            throw std::logic_error("isotopy search produced a non-witness");
    }
    out_->push_back(std::move(g));
    if (first_only_) done_ = true;
}

SearchOutcome IsotopySearch::run(std::vector<Isotopism>& out, bool first_only) {
    out_ = &out;
    first_only_ = first_only;
    done_ = false;
    budget_hit_ = false;
    search_rows(0);
    if (budget_hit_) return SearchOutcome::budget_exceeded;
    return out.empty() ? SearchOutcome::exhausted : SearchOutcome::found;
}

} // namespace detail
} // namespace lbt
