#include "lbt/tau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace lbt {

namespace {

std::string triple_str(const Triple& t) {
    return "(" + std::to_string(t.row) + "," + std::to_string(t.col) + "," +
           std::to_string(t.sym) + ")";
}

std::vector<uint32_t> invert_map(const std::vector<uint32_t>& f) {
    std::vector<uint32_t> inv(f.size());
    for (uint32_t i = 0; i < f.size(); ++i) inv[f[i]] = i;
    return inv;
}

} // namespace

TauRepresentation TauRepresentation::from_permutations(Permutation t1, Permutation t2,
                                                       Permutation t3) {
    if (t1.degree() != t2.degree() || t2.degree() != t3.degree())
        throw std::invalid_argument("representation permutations must share a degree");
    TauRepresentation rep;
    rep.m = t1.degree();
    rep.cycles1 = t1.cycles();
    rep.cycles2 = t2.cycles();
    rep.cycles3 = t3.cycles();
    rep.tau1 = std::move(t1);
    rep.tau2 = std::move(t2);
    rep.tau3 = std::move(t3);
    return rep;
}

const Permutation& TauRepresentation::tau(int i) const {
    switch (i) {
        case 1: return tau1;
        case 2: return tau2;
        case 3: return tau3;
    }
    throw std::invalid_argument("tau index must be 1, 2, or 3");
}

const std::vector<std::vector<uint32_t>>& TauRepresentation::cycles(int i) const {
    switch (i) {
        case 1: return cycles1;
        case 2: return cycles2;
        case 3: return cycles3;
    }
    throw std::invalid_argument("cycle index must be 1, 2, or 3");
}

std::vector<uint32_t> compute_beta(const Bitrade& b, int r) {
    if (r < 1 || r > 3) throw std::invalid_argument("beta coordinate must be 1, 2, or 3");
    if (b.circ().size() != b.star().size())
        throw std::invalid_argument("bitrade sides differ in size");
    // key on the two coordinates beta_r preserves
    auto key = [&](const Triple& t) -> std::pair<uint32_t, uint32_t> {
        switch (r) {
            case 1: return {t.col, t.sym};
            case 2: return {t.row, t.sym};
            default: return {t.row, t.col};
        }
    };
    std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> circ_by_key;
    const auto& circ = b.circ().entries();
    for (uint32_t i = 0; i < circ.size(); ++i) circ_by_key[key(circ[i])].push_back(i);

    const auto& star = b.star().entries();
    std::vector<uint32_t> beta(star.size());
    std::vector<uint32_t> hits(circ.size(), 0);
    for (uint32_t j = 0; j < star.size(); ++j) {
        auto it = circ_by_key.find(key(star[j]));
        uint32_t count = it == circ_by_key.end() ? 0 : static_cast<uint32_t>(it->second.size());
        if (count != 1)
            throw std::invalid_argument("not a bitrade: entry " + triple_str(star[j]) +
                                        " has " + std::to_string(count) +
                                        " partners sharing the coordinates other than " +
                                        std::to_string(r));
        uint32_t i = it->second.front();
        // beta_r must change coordinate r; agreeing there means the sides overlap
        if (circ[i] == star[j])
            throw std::invalid_argument("not a bitrade: entry " + triple_str(star[j]) +
                                        " appears on both sides");
        beta[j] = i;
        ++hits[i];
    }
    for (uint32_t i = 0; i < hits.size(); ++i)
        if (hits[i] != 1)
            throw std::invalid_argument("not a bitrade: entry " + triple_str(circ[i]) +
                                        " has " + std::to_string(hits[i]) +
                                        " partners sharing the coordinates other than " +
                                        std::to_string(r));
    return beta;
}

TauRepresentation compute_tau(const Bitrade& b) {
    if (b.circ().size() == 0) throw std::invalid_argument("bitrade is empty");
    if (!b.circ().all_labels_used() || !b.star().all_labels_used())
        throw std::invalid_argument(
            "some declared row, column, or symbol label has no entries; "
            "the entry representation is only defined over occupied labels");
    TauRepresentation rep;
    rep.m = static_cast<uint32_t>(b.circ().size());
    rep.beta1 = compute_beta(b, 1);
    rep.beta2 = compute_beta(b, 2);
    rep.beta3 = compute_beta(b, 3);
    auto inv1 = invert_map(rep.beta1);
    auto inv2 = invert_map(rep.beta2);
    auto inv3 = invert_map(rep.beta3);
    std::vector<uint32_t> t1(rep.m), t2(rep.m), t3(rep.m);
    for (uint32_t e = 0; e < rep.m; ++e) {
        t1[e] = rep.beta3[inv2[e]];
        t2[e] = rep.beta1[inv3[e]];
        t3[e] = rep.beta2[inv1[e]];
    }
    rep.tau1 = Permutation(std::move(t1));
    rep.tau2 = Permutation(std::move(t2));
    rep.tau3 = Permutation(std::move(t3));
    rep.cycles1 = rep.tau1.cycles();
    rep.cycles2 = rep.tau2.cycles();
    rep.cycles3 = rep.tau3.cycles();
    return rep;
}

TauAxiomReport check_tau_axioms(const TauRepresentation& t) {
    TauAxiomReport report;
    const TauRepresentation* rep = &t;
    for (int r = 1; r <= 3 && !report.overlap_failure; ++r) {
        for (int s = r + 1; s <= 3 && !report.overlap_failure; ++s) {
            for (const auto& cr : rep->cycles(r)) {
                std::vector<uint32_t> sorted_r(cr);
                std::sort(sorted_r.begin(), sorted_r.end());
                for (const auto& cs : rep->cycles(s)) {
                    std::vector<uint32_t> sorted_s(cs);
                    std::sort(sorted_s.begin(), sorted_s.end());
                    std::vector<uint32_t> shared;
                    std::set_intersection(sorted_r.begin(), sorted_r.end(),
                                          sorted_s.begin(), sorted_s.end(),
                                          std::back_inserter(shared));
                    if (shared.size() > 1) {
                        report.overlap_failure = CycleOverlapWitness{r, s, cr, cs, shared};
                        break;
                    }
                }
                if (report.overlap_failure) break;
            }
        }
    }
    for (int i = 1; i <= 3 && !report.fixed_point; ++i) {
        const auto& p = rep->tau(i);
        for (uint32_t x = 0; x < p.degree(); ++x)
            if (p[x] == x) {
                report.fixed_point = FixedPointWitness{i, x};
                break;
            }
    }
    Permutation prod = t.tau1 * t.tau2 * t.tau3;
    for (uint32_t x = 0; x < prod.degree(); ++x)
        if (prod[x] != x) {
            report.product_moves = x;
            break;
        }
    return report;
}

namespace {

// every cycle starts at its least entry; all entries of a tau1 cycle share a
// row, of a tau2 cycle a column, of a tau3 cycle a symbol
uint32_t label_of_cycle(const PartialLatinSquare& circ, const std::vector<uint32_t>& cycle,
                        int rep) {
    const Triple& t = circ.entries()[cycle.front()];
    return rep == 1 ? t.row : (rep == 2 ? t.col : t.sym);
}

} // namespace

SeparatedReport is_separated(const Bitrade& b) {
    TauRepresentation rep = compute_tau(b);
    SeparatedReport report;
    report.row_cycles.assign(b.circ().n_rows(), 0);
    report.col_cycles.assign(b.circ().n_cols(), 0);
    report.sym_cycles.assign(b.circ().n_syms(), 0);
    for (const auto& c : rep.cycles1) ++report.row_cycles[label_of_cycle(b.circ(), c, 1)];
    for (const auto& c : rep.cycles2) ++report.col_cycles[label_of_cycle(b.circ(), c, 2)];
    for (const auto& c : rep.cycles3) ++report.sym_cycles[label_of_cycle(b.circ(), c, 3)];
    report.cycle_totals = {static_cast<uint32_t>(rep.cycles1.size()),
                           static_cast<uint32_t>(rep.cycles2.size()),
                           static_cast<uint32_t>(rep.cycles3.size())};
    auto all_one = [](const std::vector<uint32_t>& v) {
        return std::all_of(v.begin(), v.end(), [](uint32_t n) { return n == 1; });
    };
    report.separated = all_one(report.row_cycles) && all_one(report.col_cycles) &&
                       all_one(report.sym_cycles);
    report.single_cycle_each = report.cycle_totals[0] == 1 && report.cycle_totals[1] == 1 &&
                               report.cycle_totals[2] == 1;
    return report;
}

std::vector<std::vector<uint32_t>> entry_orbits(const TauRepresentation& t) {
    return orbits_of({t.tau1, t.tau2}, t.m);
}

GenusResult genus(const Bitrade& b) {
    TauRepresentation rep = compute_tau(b);
    SeparatedReport sep = is_separated(b);
    GenusResult result;
    result.cycle_totals = sep.cycle_totals;
    result.euler_lhs = static_cast<int64_t>(sep.cycle_totals[0]) + sep.cycle_totals[1] +
                       sep.cycle_totals[2] - static_cast<int64_t>(rep.m);

    auto orbits = entry_orbits(rep);
    for (const auto& orbit : orbits) {
        std::vector<bool> in_orbit(rep.m, false);
        for (uint32_t e : orbit) in_orbit[e] = true;
        int64_t z = 0;
        for (int i = 1; i <= 3; ++i)
            for (const auto& c : rep.cycles(i))
                if (in_orbit[c.front()]) ++z;
        int64_t lhs = z - static_cast<int64_t>(orbit.size());
        result.orbit_genera.push_back((2 - lhs) / 2);
    }

    if (!sep.separated) {
        result.status = GenusResult::Status::not_separated;
        return result;
    }
    if (orbits.size() > 1) {
        result.status = GenusResult::Status::disconnected;
        return result;
    }
    int64_t two_minus_2g = result.euler_lhs;
    if ((2 - two_minus_2g) % 2 != 0 || two_minus_2g > 2) {
        result.status = GenusResult::Status::non_integer;
        return result;
    }
    result.status = GenusResult::Status::ok;
    result.genus = (2 - two_minus_2g) / 2;
    return result;
}

} // namespace lbt
