#include "lbt/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace lbt {

const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::inapplicable: return "inapplicable";
        case ClaimStatus::capped: return "capped";
    }
    return "?";
}

bool VerifierReport::hypotheses_met() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const Hypothesis& h) { return h.holds; });
}

bool VerifierReport::any_failure() const {
    return std::any_of(claims.begin(), claims.end(),
                       [](const Claim& c) { return c.status == ClaimStatus::fail; });
}

bool VerifierReport::any_capped() const {
    return std::any_of(claims.begin(), claims.end(),
                       [](const Claim& c) { return c.status == ClaimStatus::capped; });
}

ClaimStatus VerifierReport::overall() const {
    if (any_failure()) return ClaimStatus::fail;
    if (any_capped()) return ClaimStatus::capped;
    if (!hypotheses_met()) return ClaimStatus::inapplicable;
    return ClaimStatus::pass;
}

void VerifierReport::claim(const std::string& name, bool ok, const std::string& witness) {
    claims.push_back({name, ok ? ClaimStatus::pass : ClaimStatus::fail,
                      ok ? std::string{} : witness});
}

void VerifierReport::hypothesis(const std::string& name, bool holds, const std::string& n) {
    hypotheses.push_back({name, holds, n});
}

void VerifierReport::note(const std::string& key, const std::string& value) {
    info.emplace_back(key, value);
}

namespace {

std::string triple_str(const Triple& t) {
    return "(" + std::to_string(t.row) + "," + std::to_string(t.col) + "," +
           std::to_string(t.sym) + ")";
}

// Shared hypothesis block: a valid, nonempty bitrade over fully used labels.
bool representable(const Bitrade& b, VerifierReport& report) {
    bool valid = validate_bitrade(b).ok();
    bool nonempty = b.size() > 0;
    bool labels = b.circ().all_labels_used() && b.star().all_labels_used();
    report.hypothesis("valid_bitrade", valid);
    report.hypothesis("nonempty", nonempty);
    report.hypothesis("all_labels_used", labels);
    return valid && nonempty && labels;
}

} // namespace

VerifierReport verify_tau_axioms(const Bitrade& b) {
    VerifierReport report;
    report.operation = "tau_axioms";
    if (!representable(b, report)) return report;
    TauRepresentation tau = compute_tau(b);
    TauAxiomReport axioms = check_tau_axioms(tau);
    report.claim("cycle_overlap_at_most_one", axioms.overlap_ok(),
                 axioms.overlap_failure
                     ? "cycles of tau" + std::to_string(axioms.overlap_failure->rep_r) +
                           " and tau" + std::to_string(axioms.overlap_failure->rep_s) +
                           " share " + std::to_string(axioms.overlap_failure->shared.size()) +
                           " points"
                     : "");
    report.claim("fixed_point_free", axioms.fixed_point_free(),
                 axioms.fixed_point ? "tau" + std::to_string(axioms.fixed_point->rep) +
                                          " fixes entry " +
                                          std::to_string(axioms.fixed_point->point)
                                    : "");
    report.claim("product_is_identity", axioms.product_is_identity());

    auto confined = [&](int which, auto label_of) {
        for (const auto& cyc : tau.cycles(which)) {
            uint32_t l = label_of(b.circ().entries()[cyc.front()]);
            for (uint32_t e : cyc)
                if (label_of(b.circ().entries()[e]) != l) return false;
        }
        return true;
    };
    report.claim("tau1_cycles_within_rows",
                 confined(1, [](const Triple& t) { return t.row; }));
    report.claim("tau2_cycles_within_cols",
                 confined(2, [](const Triple& t) { return t.col; }));
    report.claim("tau3_cycles_within_syms",
                 confined(3, [](const Triple& t) { return t.sym; }));
    return report;
}

VerifierReport verify_regular_bitrade_reconstruction(const Bitrade& b,
                                                     const SearchCaps& caps) {
    VerifierReport report;
    report.operation = "regular_bitrade_reconstruction";
    if (!representable(b, report)) return report;

    PrimaryResult primary = is_primary(b, caps.max_nodes);
    report.hypothesis("primary", primary.status == PrimaryStatus::primary);
    ThinResult thin = is_thin(b);
    report.hypothesis("thin", thin.thin);
    SeparatedReport sep = is_separated(b);
    report.hypothesis("separated", sep.separated);

    AutotopismGroup atop = autotopism_group(b.circ(), caps);
    GroupAction action = entry_action(atop, b.circ());
    bool regular = is_regular_action(action);
    report.hypothesis("regular_circ_stabilizer", regular,
                      "order " + std::to_string(atop.order()) + " on " +
                          std::to_string(b.size()) + " entries");
    if (!report.hypotheses_met()) return report;

    TauRepresentation tau = compute_tau(b);

    // stage one: the local configuration at the first entry, and the unique
    // autotopisms moving along it
    uint32_t e0 = 0;
    uint32_t e1 = tau.tau1[e0];
    uint32_t e2 = tau.tau2[e1];
    const Triple& t0 = b.circ().entries()[e0];
    const Triple& t1 = b.circ().entries()[e1];
    const Triple& t2 = b.circ().entries()[e2];
    report.claim("local_configuration",
                 t1.row == t0.row && t1.col != t0.col && t1.sym != t0.sym &&
                     t2.col == t1.col && t2.row != t1.row && t2.sym == t0.sym,
                 triple_str(t0) + " " + triple_str(t1) + " " + triple_str(t2));
    report.note("base_configuration",
                triple_str(t0) + " -> " + triple_str(t1) + " -> " + triple_str(t2));

    auto unique_mover = [&](uint32_t from, uint32_t to) -> std::optional<uint32_t> {
        std::optional<uint32_t> found;
        for (uint32_t i = 0; i < action.point_images.size(); ++i) {
            if (action.point_images[i][from] == to) {
                if (found) return std::nullopt;
                found = i;
            }
        }
        return found;
    };
    auto n1 = unique_mover(e0, e1);
    auto n2 = unique_mover(e1, e2);
    auto n3 = unique_mover(e2, e0);
    report.claim("unique_nu1", n1.has_value());
    report.claim("unique_nu2", n2.has_value());
    report.claim("unique_nu3", n3.has_value());
    if (!n1 || !n2 || !n3) return report;
    const Permutation& f1 = atop.fused.elements()[*n1];
    const Permutation& f2 = atop.fused.elements()[*n2];
    const Permutation& f3 = atop.fused.elements()[*n3];

    // stage two: the nus compose to the identity and their entry actions
    // satisfy the representation axioms
    report.claim("nu_product_is_identity", (f1 * f2 * f3).is_identity());
    TauRepresentation nu_rep = TauRepresentation::from_permutations(
        action.point_images[*n1], action.point_images[*n2], action.point_images[*n3]);
    TauAxiomReport nu_axioms = check_tau_axioms(nu_rep);
    report.claim("nu_fixed_point_free", nu_axioms.fixed_point_free());
    report.claim("nu_cycle_overlap_at_most_one", nu_axioms.overlap_ok());

    // stage three: how the nus relate to the taus. Their defining
    // displacements agree, and thinness makes every autotopism of the circ
    // side preserve the star side too, so the nu entry actions centralize
    // the taus. Full equality nu_i == tau_i holds exactly when the
    // stabilizer is abelian: on a coset-constructed bitrade the stabilizer
    // translates on the left while the taus translate on the right.
    report.claim("nu_displacements_match_tau",
                 nu_rep.tau1[e0] == tau.tau1[e0] && nu_rep.tau2[e1] == tau.tau2[e1] &&
                     nu_rep.tau3[e2] == tau.tau3[e2]);
    bool centralize = true;
    for (const Permutation* nu : {&nu_rep.tau1, &nu_rep.tau2, &nu_rep.tau3})
        for (const Permutation* t : {&tau.tau1, &tau.tau2, &tau.tau3})
            if (*nu * *t != *t * *nu) centralize = false;
    report.claim("nu_entry_actions_centralize_tau", centralize);
    if (atop.fused.is_abelian()) {
        report.claim("nu_entry_actions_equal_tau",
                     nu_rep.tau1 == tau.tau1 && nu_rep.tau2 == tau.tau2 &&
                         nu_rep.tau3 == tau.tau3);
    } else {
        report.claims.push_back({"nu_entry_actions_equal_tau", ClaimStatus::inapplicable,
                                 "stabilizer is nonabelian; its translations act on the "
                                 "side opposite the taus"});
    }

    // stage four: rebuild from the stabilizer and exhibit the isotopism.
    // Everything is anchored at the base entry: the triad consists of the
    // unique elements pulling tau_i(e0) back to e0 (so their product is the
    // identity under left-to-right composition), and each entry corresponds
    // to the unique element pulling it back to e0. Entries of one row then
    // share a left coset of <a>, and likewise for columns and symbols.
    report.claim("nu_generate_stabilizer",
                 PermGroup::closure(atop.fused.degree(), {f1, f2, f3})
                     .same_element_set(atop.fused));
    auto na = unique_mover(tau.tau1[e0], e0);
    auto nb = unique_mover(tau.tau2[e0], e0);
    auto nc = unique_mover(tau.tau3[e0], e0);
    if (!na || !nb || !nc) {
        report.claim("triad_movers_exist", false);
        return report;
    }
    CayleyGroup cg = cayley_table_of(atop.fused, "stabilizer");
    TriadSpec triad{cg, *na, *nb, *nc};
    TriadReport tr = check_triad(triad);
    report.claim("nu_triad_construction_ready", tr.construction_ready());
    if (!tr.construction_ready()) return report;
    GroupBitrade rebuilt = group_based_bitrade(triad);

    report.claim("label_counts_match",
                 rebuilt.labels.n_rows == b.circ().n_rows() &&
                     rebuilt.labels.n_cols == b.circ().n_cols() &&
                     rebuilt.labels.n_syms == b.circ().n_syms());
    if (report.any_failure()) return report;

    // theta sends each entry to the cosets of the unique stabilizer element
    // carrying it back to the base entry; under left-to-right composition
    // that is the orientation for which entries of one row share a left
    // coset of <nu1>, matching the construction's row labels
    std::vector<uint32_t> row_map(b.circ().n_rows(), UINT32_MAX);
    std::vector<uint32_t> col_map(b.circ().n_cols(), UINT32_MAX);
    std::vector<uint32_t> sym_map(b.circ().n_syms(), UINT32_MAX);
    bool consistent = true;
    std::string clash;
    for (uint32_t e = 0; e < b.size(); ++e) {
        auto g = unique_mover(e, e0);
        if (!g) {
            consistent = false;
            clash = "no unique stabilizer element reaches entry " + std::to_string(e);
            break;
        }
        const Triple& t = b.circ().entries()[e];
        uint32_t targets[3] = {rebuilt.labels.row_of[*g], rebuilt.labels.col_of[*g],
                               rebuilt.labels.sym_of[*g]};
        uint32_t sources[3] = {t.row, t.col, t.sym};
        std::vector<uint32_t>* maps[3] = {&row_map, &col_map, &sym_map};
        for (int i = 0; i < 3; ++i) {
            uint32_t& slot = (*maps[i])[sources[i]];
            if (slot == UINT32_MAX) slot = targets[i];
            else if (slot != targets[i]) {
                consistent = false;
                clash = "label " + std::to_string(sources[i]) + " maps two ways";
            }
        }
    }
    report.claim("theta_well_defined", consistent, clash);
    if (!consistent) return report;
    for (auto* m : {&row_map, &col_map, &sym_map})
        if (std::count(m->begin(), m->end(), UINT32_MAX) != 0) {
            report.claim("theta_total", false, "some label never occurs");
            return report;
        }
    Isotopism theta{Permutation(std::move(row_map)), Permutation(std::move(col_map)),
                    Permutation(std::move(sym_map))};
    report.claim("theta_maps_circ_onto_construction",
                 apply_isotopism(b.circ(), theta).entries() ==
                     rebuilt.bitrade.circ().entries());
    report.claim("theta_maps_star_onto_construction",
                 apply_isotopism(b.star(), theta).entries() ==
                     rebuilt.bitrade.star().entries());
    return report;
}

VerifierReport verify_genus0_mate_uniqueness(const PartialLatinSquare& t,
                                             const SearchCaps& caps, size_t mate_limit) {
    (void)caps;
    VerifierReport report;
    report.operation = "genus0_mate_uniqueness";
    report.hypothesis("valid_square", validate_pls(t).ok());
    report.hypothesis("all_labels_used", t.all_labels_used());
    if (!report.hypotheses_met()) return report;

    MateEnumeration mates = enumerate_disjoint_mates(t, mate_limit);
    if (mates.truncated) {
        report.claims.push_back({"unique_separated_genus0_mate", ClaimStatus::capped,
                                 "mate enumeration truncated at " +
                                     std::to_string(mates.mates.size())});
        return report;
    }
    size_t genus0 = 0;
    for (const auto& mate : mates.mates) {
        Bitrade candidate(t, mate);
        GenusResult g = genus(candidate);
        if (g.ok() && g.genus == 0) ++genus0;
    }
    report.note("mates_total", std::to_string(mates.mates.size()));
    report.note("mates_separated_genus0", std::to_string(genus0));
    report.hypothesis("admits_separated_genus0_mate", genus0 >= 1);
    if (genus0 >= 1)
        report.claim("unique_separated_genus0_mate", genus0 == 1,
                     std::to_string(genus0) + " such mates");
    return report;
}

VerifierReport verify_genus0_autotopism_equality(const Bitrade& b, const SearchCaps& caps) {
    VerifierReport report;
    report.operation = "genus0_autotopism_equality";
    if (!representable(b, report)) return report;
    SeparatedReport sep = is_separated(b);
    report.hypothesis("separated", sep.separated);
    GenusResult g = genus(b);
    report.hypothesis("genus_zero", g.ok() && g.genus == 0,
                      g.ok() ? "genus " + std::to_string(g.genus) : "genus undefined");
    if (!report.hypotheses_met()) return report;
    AutotopismGroup circ = autotopism_group(b.circ(), caps);
    AutotopismGroup star = autotopism_group(b.star(), caps);
    report.note("stabilizer_order", std::to_string(circ.order()));
    report.claim("stabilizers_equal_as_sets", circ.fused.same_element_set(star.fused),
                 "orders " + std::to_string(circ.order()) + " vs " +
                     std::to_string(star.order()));
    return report;
}

TauEmbedding build_tau_embedding(const Bitrade& b, const TauRepresentation& tau,
                                 const PermGroup& tau_aut) {
    TauEmbedding embedding;
    // label <-> cycle tables, one cycle per label when separated
    struct Blocks {
        std::vector<std::vector<uint32_t>> cycle_of_label; // label -> sorted cycle
        std::map<std::vector<uint32_t>, uint32_t> label_of_cycle;
    };
    auto label_of = [&](int which, uint32_t entry) {
        const Triple& t = b.circ().entries()[entry];
        return which == 1 ? t.row : (which == 2 ? t.col : t.sym);
    };
    uint32_t sizes[4] = {0, b.circ().n_rows(), b.circ().n_cols(), b.circ().n_syms()};
    Blocks blocks[4];
    for (int which = 1; which <= 3; ++which) {
        Blocks& bl = blocks[which];
        bl.cycle_of_label.assign(sizes[which], {});
        for (const auto& cyc : tau.cycles(which)) {
            std::vector<uint32_t> sorted(cyc);
            std::sort(sorted.begin(), sorted.end());
            uint32_t l = label_of(which, cyc.front());
            if (!bl.cycle_of_label[l].empty()) {
                embedding.failure = "label has two cycles; bitrade is not separated";
                return embedding;
            }
            bl.cycle_of_label[l] = sorted;
            bl.label_of_cycle[sorted] = l;
        }
        for (uint32_t l = 0; l < sizes[which]; ++l)
            if (bl.cycle_of_label[l].empty()) {
                embedding.failure = "label without a cycle";
                return embedding;
            }
    }
    for (const auto& theta : tau_aut.elements()) {
        Isotopism iso{Permutation::identity(sizes[1]), Permutation::identity(sizes[2]),
                      Permutation::identity(sizes[3])};
        Permutation* parts[4] = {nullptr, &iso.rows, &iso.cols, &iso.syms};
        for (int which = 1; which <= 3; ++which) {
            std::vector<uint32_t> img(sizes[which]);
            for (uint32_t l = 0; l < sizes[which]; ++l) {
                std::vector<uint32_t> image_cycle;
                for (uint32_t e : blocks[which].cycle_of_label[l])
                    image_cycle.push_back(theta[e]);
                std::sort(image_cycle.begin(), image_cycle.end());
                auto it = blocks[which].label_of_cycle.find(image_cycle);
                if (it == blocks[which].label_of_cycle.end()) {
                    embedding.failure =
                        "a centralizing permutation does not permute the cycles";
                    return embedding;
                }
                img[l] = it->second;
            }
            *parts[which] = Permutation(std::move(img));
        }
        embedding.images.push_back(std::move(iso));
    }
    embedding.defined = true;
    return embedding;
}

VerifierReport embed_tau_automorphisms(const Bitrade& b, const SearchCaps& caps) {
    VerifierReport report;
    report.operation = "tau_centralizer_embedding";
    if (!representable(b, report)) return report;
    SeparatedReport sep = is_separated(b);
    report.hypothesis("separated", sep.separated);

    TauRepresentation tau = compute_tau(b);
    PermGroup aut = tau_automorphism_group(tau, caps.max_group_elements);
    report.note("tau_centralizer_order", std::to_string(aut.order()));
    AutotopismGroup both = autotopism_group_bitrade(b, caps);
    report.note("two_sided_stabilizer_order", std::to_string(both.order()));
    if (!sep.separated) return report;

    TauEmbedding embedding = build_tau_embedding(b, tau, aut);
    report.claim("block_action_defined", embedding.defined, embedding.failure);
    if (!embedding.defined) return report;

    bool in_stabilizer = true;
    bool recovers = true;
    std::set<Permutation> distinct;
    for (size_t i = 0; i < embedding.images.size(); ++i) {
        const Isotopism& iso = embedding.images[i];
        if (!both.contains(iso)) in_stabilizer = false;
        auto action = entry_action_of(b.circ(), iso);
        if (!action || *action != aut.elements()[i]) recovers = false;
        distinct.insert(both.fuse(iso));
    }
    report.claim("image_in_two_sided_stabilizer", in_stabilizer);
    report.claim("entry_action_recovers_original", recovers);
    report.claim("injective", distinct.size() == aut.order(),
                 std::to_string(distinct.size()) + " images of " +
                     std::to_string(aut.order()) + " elements");
    bool homomorphism = true;
    const auto& els = aut.elements();
    for (size_t i = 0; i < els.size() && homomorphism; ++i)
        for (size_t j = 0; j < els.size(); ++j) {
            Permutation prod = els[i] * els[j];
            size_t k = static_cast<size_t>(
                std::lower_bound(els.begin(), els.end(), prod) - els.begin());
            if (embedding.images[i] * embedding.images[j] != embedding.images[k]) {
                homomorphism = false;
                break;
            }
        }
    report.claim("homomorphism", homomorphism);
    report.note("image_is_proper_subgroup",
                distinct.size() < both.order() ? "yes" : "no");
    return report;
}

VerifierReport verify_atop_tau_isomorphism(const Bitrade& b, const SearchCaps& caps) {
    VerifierReport report;
    report.operation = "atop_tau_isomorphism";
    if (!representable(b, report)) return report;
    SeparatedReport sep = is_separated(b);
    report.hypothesis("separated", sep.separated);
    if (!sep.separated) return report;

    AutotopismGroup atop = autotopism_group(b.circ(), caps);
    bool regular = is_regular_action(entry_action(atop, b.circ()));
    report.hypothesis("regular_circ_stabilizer", regular,
                      "order " + std::to_string(atop.order()));
    TauRepresentation tau = compute_tau(b);
    PermGroup aut = tau_automorphism_group(tau, caps.max_group_elements);
    report.hypothesis("transitive_tau_centralizer", aut.is_transitive(),
                      "order " + std::to_string(aut.order()));
    if (!report.hypotheses_met()) return report;

    report.claim("centralizer_order_equals_entry_count", aut.order() == b.size(),
                 std::to_string(aut.order()) + " vs " + std::to_string(b.size()));
    TauEmbedding embedding = build_tau_embedding(b, tau, aut);
    report.claim("embedding_defined", embedding.defined, embedding.failure);
    if (!embedding.defined) return report;
    std::vector<Permutation> image;
    for (const auto& iso : embedding.images) image.push_back(atop.fuse(iso));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    report.claim("embedding_is_onto_circ_stabilizer",
                 image.size() == atop.order() && image == atop.fused.elements(),
                 "image order " + std::to_string(image.size()));
    return report;
}

VerifierReport constellation_checks(const Constellation& c, const SearchCaps& caps) {
    VerifierReport report;
    report.operation = "constellation";
    if (c.maps.empty()) {
        report.hypothesis("nonempty", false);
        return report;
    }
    report.hypothesis("nonempty", true);
    for (const auto& m : c.maps)
        if (m.degree() != c.degree) {
            report.hypothesis("degrees_match", false);
            return report;
        }
    report.hypothesis("degrees_match", true);

    Permutation prod = Permutation::identity(c.degree);
    for (const auto& m : c.maps) prod = prod * m;
    report.claim("product_is_identity", prod.is_identity());

    // the cartographic group is only enumerated in the transitive-centralizer
    // branch, where it is regular and so has exactly `degree` elements
    bool cart_transitive = orbits_of(c.maps, c.degree).size() == 1;
    report.claim("cartographic_group_transitive", cart_transitive);
    if (report.any_failure()) return report;

    PermGroup aut = centralizer_in_sym(c.degree, c.maps, caps.max_group_elements);
    bool transitive = aut.is_transitive();
    bool order_matches = aut.order() == c.degree;
    report.note("centralizer_order", std::to_string(aut.order()));
    report.claim("transitive_iff_order_equals_degree", transitive == order_matches,
                 std::string("transitive=") + (transitive ? "yes" : "no") + " order=" +
                     std::to_string(aut.order()));
    if (!transitive) {
        report.note("transitive_centralizer", "no");
        return report;
    }
    report.note("transitive_centralizer", "yes");

    // the bijection of the equivalence: points <-> cartographic elements via
    // the base point, the group acting on the right, the centralizer on the left
    PermGroup cartographic =
        PermGroup::closure(c.degree, c.maps, caps.max_group_elements);
    bool cart_regular = is_regular_action(GroupAction::natural(cartographic));
    report.claim("cartographic_group_regular", cart_regular);
    if (!cart_regular) return report;
    CayleyGroup cg = cayley_table_of(cartographic, "cartographic");
    const auto& els = cartographic.elements();
    std::vector<uint32_t> element_at_point(c.degree); // point -> index of g with 0^g = p
    for (uint32_t i = 0; i < els.size(); ++i) element_at_point[els[i][0]] = i;
    std::vector<uint32_t> point_of_element(c.degree);
    for (uint32_t p = 0; p < c.degree; ++p) point_of_element[element_at_point[p]] = p;

    RegularRepresentations reps = regular_representations(cg);
    std::vector<Permutation> transported;
    for (const auto& theta : aut.elements()) {
        std::vector<uint32_t> img(c.degree);
        for (uint32_t x = 0; x < c.degree; ++x)
            img[x] = element_at_point[theta[point_of_element[x]]];
        transported.emplace_back(std::move(img));
    }
    std::sort(transported.begin(), transported.end());
    report.claim("centralizer_acts_by_left_multiplication",
                 transported == reps.left.elements());
    std::vector<Permutation> right_transport;
    for (uint32_t i = 0; i < els.size(); ++i) {
        std::vector<uint32_t> img(c.degree);
        for (uint32_t x = 0; x < c.degree; ++x)
            img[x] = element_at_point[els[i][point_of_element[x]]];
        right_transport.emplace_back(std::move(img));
    }
    std::sort(right_transport.begin(), right_transport.end());
    report.claim("cartographic_group_acts_by_right_multiplication",
                 right_transport == reps.right.elements());
    report.claim("centralizer_isomorphic_to_cartographic_group",
                 aut.order() == cartographic.order() &&
                     transported == reps.left.elements());
    return report;
}

VerifierReport verify_regular_representation_centralizer(const CayleyGroup& g,
                                                         const SearchCaps& caps) {
    VerifierReport report;
    report.operation = "regular_representation_centralizer";
    report.fixture = g.name;
    report.hypothesis("valid_table", validate_cayley(g).ok());
    if (!report.hypotheses_met()) return report;
    RegularRepresentations reps = regular_representations(g);
    report.claim("right_action_regular", is_regular_action(GroupAction::natural(reps.right)));
    report.claim("left_action_regular", is_regular_action(GroupAction::natural(reps.left)));
    bool commute = true;
    for (const auto& l : reps.left.elements()) {
        for (const auto& r : reps.right.elements())
            if (l * r != r * l) {
                commute = false;
                break;
            }
        if (!commute) break;
    }
    report.claim("left_and_right_commute_elementwise", commute);
    report.claim("centralizer_of_right_is_left",
                 centralizer_in_sym(reps.right, caps.max_group_elements)
                     .same_element_set(reps.left));
    report.claim("centralizer_of_left_is_right",
                 centralizer_in_sym(reps.left, caps.max_group_elements)
                     .same_element_set(reps.right));
    return report;
}

} // namespace lbt
