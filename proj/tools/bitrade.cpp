// bitrade -- command-line front end: validate, analyze, construct, sweep,
// mates, isotopic.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lbt/catalog.hpp"
#include "lbt/groups.hpp"
#include "lbt/io.hpp"
#include "lbt/tau.hpp"
#include "lbt/verify.hpp"

using nlohmann::ordered_json;

namespace {

struct GlobalOptions {
    lbt::SearchCaps caps;
    uint64_t seed = 0;
    bool json = false;
};

std::string triple_text(const lbt::Triple& t, const lbt::LabelMap& labels) {
    return "(" + labels.rows[t.row] + "," + labels.cols[t.col] + "," + labels.syms[t.sym] + ")";
}

int cmd_validate(const std::string& path, const GlobalOptions& opt) {
    lbt::Document doc;
    try {
        doc = lbt::load_document(path);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    ordered_json out;
    out["file"] = doc.source;
    out["format"] = lbt::to_string(doc.format);
    bool ok = true;
    auto pls_violations = [&](const lbt::PlsReport& report, const lbt::LabelMap& labels) {
        ordered_json list = ordered_json::array();
        for (const auto& v : report.violations) {
            const char* kinds[] = {"out_of_range", "repeated_row_sym", "repeated_col_sym",
                                   "repeated_cell"};
            list.push_back({{"kind", kinds[static_cast<int>(v.kind)]},
                            {"entry", triple_text(v.a, labels)},
                            {"partner", triple_text(v.b, labels)}});
        }
        return list;
    };
    if (doc.pls) {
        auto report = lbt::validate_pls(*doc.pls);
        ok = report.ok();
        out["violations"] = pls_violations(report, doc.labels);
    } else if (doc.bitrade) {
        auto report = lbt::validate_bitrade(*doc.bitrade);
        ok = report.ok();
        out["circ_violations"] = pls_violations(report.circ, doc.labels);
        out["star_violations"] = pls_violations(report.star, doc.labels);
        ordered_json overlap = ordered_json::array();
        for (const auto& t : report.overlap) overlap.push_back(triple_text(t, doc.labels));
        out["overlap"] = overlap;
        ordered_json partners = ordered_json::array();
        for (const auto& p : report.partner_failures)
            partners.push_back({{"side", p.from_side == 0 ? "circ" : "star"},
                                {"entry", triple_text(p.entry, doc.labels)},
                                {"coordinates", {p.coord_r, p.coord_s}},
                                {"partners", p.partner_count}});
        out["partner_failures"] = partners;
    } else if (doc.cayley) {
        auto report = lbt::validate_cayley(*doc.cayley);
        ok = report.ok();
        out["violations"] = report.violations.size();
    } else if (doc.constellation) {
        auto report = lbt::constellation_checks(*doc.constellation, opt.caps);
        ok = !report.any_failure();
        out["report"] = lbt::report_to_json(report);
    }
    out["ok"] = ok;
    if (opt.json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << doc.source << ": " << (ok ? "ok" : "invalid") << "\n";
    return ok ? 0 : 1;
}

int cmd_analyze(const std::string& path, const GlobalOptions& opt, bool show_tau,
                bool show_genus, bool show_separated, bool show_thin, bool show_primary,
                bool show_atop, bool show_mates, bool verify_all, size_t limit) {
    lbt::Document doc;
    try {
        doc = lbt::load_document(path);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    if (!doc.bitrade) {
        std::cerr << "analyze expects a bitrade file\n";
        return 2;
    }
    const lbt::Bitrade& b = *doc.bitrade;
    ordered_json out;
    out["file"] = doc.source;
    out["entries"] = b.size();
    auto guard = [&](const char* key, auto&& fn) {
        try {
            fn();
        } catch (const lbt::cap_exceeded& e) {
            out[key] = {{"status", "capped"}, {"reason", e.what()}};
        } catch (const std::exception& e) {
            out[key] = {{"status", "error"}, {"reason", e.what()}};
        }
    };
    if (show_tau) guard("tau", [&] {
        auto tau = lbt::compute_tau(b);
        out["tau"] = {{"tau1", tau.tau1.cycle_string()},
                      {"tau2", tau.tau2.cycle_string()},
                      {"tau3", tau.tau3.cycle_string()},
                      {"cycle_counts",
                       {tau.cycles1.size(), tau.cycles2.size(), tau.cycles3.size()}}};
        ordered_json legend = ordered_json::array();
        for (const auto& t : b.circ().entries()) legend.push_back(triple_text(t, doc.labels));
        out["tau"]["entries"] = legend;
    });
    if (show_genus) guard("genus", [&] {
        auto g = lbt::genus(b);
        const char* status[] = {"ok", "not_separated", "disconnected", "non_integer"};
        out["genus"] = {{"status", status[static_cast<int>(g.status)]}};
        if (g.ok()) out["genus"]["genus"] = g.genus;
        out["genus"]["component_genera"] = g.orbit_genera;
    });
    if (show_separated) guard("separated", [&] {
        auto s = lbt::is_separated(b);
        out["separated"] = {{"separated", s.separated},
                            {"row_cycles", s.row_cycles},
                            {"col_cycles", s.col_cycles},
                            {"sym_cycles", s.sym_cycles},
                            {"cycle_totals", s.cycle_totals}};
    });
    if (show_thin) guard("thin", [&] {
        auto t = lbt::is_thin(b);
        out["thin"] = {{"thin", t.thin}};
        if (t.counterexample)
            out["thin"]["counterexample"] = {triple_text(t.counterexample->first, doc.labels),
                                             triple_text(t.counterexample->second, doc.labels)};
    });
    if (show_primary) guard("primary", [&] {
        auto p = lbt::is_primary(b, opt.caps.max_nodes);
        const char* status[] = {"primary", "not_primary", "unknown"};
        out["primary"] = {{"status", status[static_cast<int>(p.status)]}};
        if (p.witness) out["primary"]["witness_size"] = p.witness->size();
    });
    if (show_atop) guard("autotopisms", [&] {
        auto circ = lbt::autotopism_group(b.circ(), opt.caps);
        auto star = lbt::autotopism_group(b.star(), opt.caps);
        auto both = lbt::autotopism_group_bitrade(b, opt.caps);
        auto gens = [&](const lbt::AutotopismGroup& g) {
            ordered_json list = ordered_json::array();
            for (const auto& e : g.fused.generators())
                list.push_back(lbt::isotopism_string(g.isotopism_of(e), doc.labels));
            return list;
        };
        out["autotopisms"] = {{"circ_order", circ.order()},
                              {"star_order", star.order()},
                              {"both_order", both.order()},
                              {"circ_generators", gens(circ)},
                              {"star_generators", gens(star)},
                              {"transitive", lbt::is_transitive_bitrade(b, opt.caps)}};
    });
    if (show_mates) guard("mates", [&] {
        auto mates = lbt::enumerate_disjoint_mates(b.circ(), limit);
        out["mates"] = {{"count", mates.mates.size()}, {"truncated", mates.truncated}};
    });
    if (verify_all) guard("verifiers", [&] {
        lbt::SweepOptions options;
        options.caps = opt.caps;
        options.mate_limit = limit;
        ordered_json list = ordered_json::array();
        for (auto& report : lbt::verify_document(doc, options)) {
            report.fixture = doc.source;
            list.push_back(lbt::report_to_json(report));
        }
        out["verifiers"] = list;
    });
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_construct(const std::string& cayley_path, uint32_t a, uint32_t b,
                  std::optional<uint32_t> c, const std::string& out_path,
                  const GlobalOptions& opt) {
    lbt::Document doc;
    try {
        doc = lbt::load_document(cayley_path);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    if (!doc.cayley) {
        std::cerr << "construct expects a cayley table file\n";
        return 2;
    }
    const lbt::CayleyGroup& g = *doc.cayley;
    auto table_report = lbt::validate_cayley(g);
    if (!table_report.ok()) {
        std::cerr << "invalid multiplication table\n";
        return 1;
    }
    uint32_t cc = c ? *c : g.inv(g.mul(a, b));
    lbt::TriadSpec spec{g, a, b, cc};
    lbt::TriadReport triad;
    try {
        triad = lbt::check_triad(spec);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    if (!triad.construction_ready()) {
        std::cerr << "construction refused: "
                  << (!triad.product_is_identity ? "a*b*c is not the identity"
                                                 : "cyclic subgroups intersect nontrivially")
                  << "\n";
        return 1;
    }
    auto built = lbt::group_based_bitrade(spec);
    lbt::Document out_doc;
    out_doc.format = lbt::DocFormat::grid_bitrade;
    out_doc.bitrade = built.bitrade;
    for (uint32_t r = 0; r < built.labels.n_rows; ++r)
        out_doc.labels.rows.push_back(std::to_string(r));
    for (uint32_t col = 0; col < built.labels.n_cols; ++col)
        out_doc.labels.cols.push_back(std::to_string(col));
    for (uint32_t s = 0; s < built.labels.n_syms; ++s)
        out_doc.labels.syms.push_back(std::to_string(s));
    std::ostringstream header;
    header << "# group order " << g.order << ", |A|=" << g.element_order(a)
           << " |B|=" << g.element_order(b) << " |C|=" << g.element_order(cc) << "\n"
           << "# conditions: product_is_identity=" << (triad.product_is_identity ? "yes" : "no")
           << " intersections_trivial=" << (triad.intersections_trivial ? "yes" : "no")
           << " generates_group=" << (triad.generates_group ? "yes" : "no") << "\n";
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    out << header.str() << lbt::print_document(out_doc);
    if (opt.json) {
        ordered_json j;
        j["entries"] = built.bitrade.size();
        j["rows"] = built.labels.n_rows;
        j["cols"] = built.labels.n_cols;
        j["syms"] = built.labels.n_syms;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "wrote " << out_path << " (" << built.bitrade.size() << " entries)\n";
    }
    return 0;
}

int cmd_sweep(const std::string& dir, const GlobalOptions& opt) {
    lbt::SweepOptions options;
    options.caps = opt.caps;
    options.seed = opt.seed;
    lbt::SweepResult result = lbt::run_sweep(dir, options);
    if (opt.json)
        std::cout << result.to_json().dump(2) << "\n";
    else
        std::cout << result.to_table();
    return result.any_fail ? 1 : 0;
}

int cmd_mates(const std::string& path, size_t limit, const GlobalOptions& opt) {
    lbt::Document doc;
    try {
        doc = lbt::load_document(path);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    const lbt::PartialLatinSquare* t =
        doc.pls ? &*doc.pls : (doc.bitrade ? &doc.bitrade->circ() : nullptr);
    if (!t) {
        std::cerr << "mates expects a square or bitrade file\n";
        return 2;
    }
    auto mates = lbt::enumerate_disjoint_mates(*t, limit);
    ordered_json out;
    out["file"] = doc.source;
    out["count"] = mates.mates.size();
    out["truncated"] = mates.truncated;
    if (opt.json) {
        ordered_json list = ordered_json::array();
        for (const auto& mate : mates.mates) {
            ordered_json entries = ordered_json::array();
            for (const auto& e : mate.entries()) entries.push_back(triple_text(e, doc.labels));
            list.push_back(entries);
        }
        out["mates"] = list;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << doc.source << ": " << mates.mates.size() << " disjoint mates"
                  << (mates.truncated ? " (truncated)" : "") << "\n";
    }
    return 0;
}

int cmd_isotopic(const std::string& path1, const std::string& path2, bool independent,
                 const GlobalOptions& opt) {
    lbt::Document d1, d2;
    try {
        d1 = lbt::load_document(path1);
        d2 = lbt::load_document(path2);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    ordered_json out;
    lbt::SearchOutcome outcome;
    if (d1.bitrade && d2.bitrade) {
        auto mode = independent ? lbt::BitradeIsotopyMode::independent
                                : lbt::BitradeIsotopyMode::simultaneous;
        auto result = lbt::are_isotopic_bitrades(*d1.bitrade, *d2.bitrade, mode, opt.caps);
        outcome = result.outcome;
        if (result.circ_witness)
            out["circ_witness"] = lbt::isotopism_string(*result.circ_witness, d1.labels);
        if (result.star_witness)
            out["star_witness"] = lbt::isotopism_string(*result.star_witness, d1.labels);
    } else if (d1.pls && d2.pls) {
        auto result = lbt::are_isotopic(*d1.pls, *d2.pls, opt.caps);
        outcome = result.outcome;
        if (result.witness)
            out["witness"] = lbt::isotopism_string(*result.witness, d1.labels);
    } else {
        std::cerr << "isotopic expects two squares or two bitrades\n";
        return 2;
    }
    const char* names[] = {"isotopic", "not_isotopic", "budget_exceeded"};
    out["outcome"] = names[static_cast<int>(outcome)];
    if (opt.json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << out["outcome"].get<std::string>() << "\n";
    return outcome == lbt::SearchOutcome::found
               ? 0
               : (outcome == lbt::SearchOutcome::exhausted ? 1 : 3);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"latin bitrade toolkit"};
    app.require_subcommand(1);
    GlobalOptions opt;
    app.add_option("--cap-nodes", opt.caps.max_nodes, "search node budget");
    app.add_option("--cap-degree", opt.caps.max_degree, "labels per coordinate");
    app.add_option("--cap-elements", opt.caps.max_group_elements, "group element cap");
    app.add_option("--seed", opt.seed, "shuffle sweep execution order (output unchanged)");
    app.add_flag("--json", opt.json, "machine-readable output");

    std::string path, path2, out_path, dir;
    size_t limit = 10000;
    bool show_tau = false, show_genus = false, show_separated = false, show_thin = false;
    bool show_primary = false, show_atop = false, show_mates = false, verify_all = false;
    bool independent = false;
    uint32_t a = 0, b = 0;
    std::optional<uint32_t> c;

    auto* validate = app.add_subcommand("validate", "check a file's defining constraints");
    validate->add_option("file", path)->required();

    auto* analyze = app.add_subcommand("analyze", "structure of a bitrade");
    analyze->add_option("file", path)->required();
    analyze->add_flag("--tau", show_tau, "entry permutations and their cycles");
    analyze->add_flag("--genus", show_genus);
    analyze->add_flag("--separated", show_separated);
    analyze->add_flag("--thin", show_thin);
    analyze->add_flag("--primary", show_primary);
    analyze->add_flag("--atop", show_atop, "autotopism groups of both sides");
    analyze->add_flag("--mates", show_mates, "disjoint mate census");
    analyze->add_flag("--verify-all", verify_all, "run every applicable verifier");
    analyze->add_option("--limit", limit, "mate enumeration limit");

    auto* construct = app.add_subcommand("construct", "group-based bitrade from a cayley table");
    construct->add_option("cayley", path)->required();
    construct->add_option("-a", a, "first element index")->required();
    construct->add_option("-b", b, "second element index")->required();
    construct->add_option("-c", c, "third element index (default: inverse of a*b)");
    construct->add_option("-o,--out", out_path, "output bitrade file")->required();

    auto* sweep = app.add_subcommand("sweep", "run all verifiers over a fixture directory");
    sweep->add_option("dir", dir)->required();

    auto* mates = app.add_subcommand("mates", "enumerate disjoint mates");
    mates->add_option("file", path)->required();
    mates->add_option("--limit", limit);

    auto* isotopic = app.add_subcommand("isotopic", "search for an isotopism between two files");
    isotopic->add_option("first", path)->required();
    isotopic->add_option("second", path2)->required();
    isotopic->add_flag("--independent", independent,
                       "allow different witnesses on the two sides of a bitrade");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) return cmd_validate(path, opt);
        if (*analyze)
            return cmd_analyze(path, opt, show_tau, show_genus, show_separated, show_thin,
                               show_primary, show_atop, show_mates, verify_all, limit);
        if (*construct) return cmd_construct(path, a, b, c, out_path, opt);
        if (*sweep) return cmd_sweep(dir, opt);
        if (*mates) return cmd_mates(path, limit, opt);
        if (*isotopic) return cmd_isotopic(path, path2, independent, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
