#include "lbt/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lbt/tau.hpp"
#include "lbt/verify.hpp"

namespace lbt {

const char* to_string(DocFormat f) {
    switch (f) {
        case DocFormat::grid_pls: return "grid";
        case DocFormat::grid_bitrade: return "grid-bitrade";
        case DocFormat::triples_pls: return "triples";
        case DocFormat::triples_bitrade: return "triples-bitrade";
        case DocFormat::cayley: return "cayley";
        case DocFormat::constellation: return "constellation";
    }
    return "?";
}

namespace {

struct Line {
    size_t number;
    std::vector<std::string> tokens;
    std::string raw;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string body = raw.substr(0, raw.find('#'));
        std::istringstream ls(body);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back({number, std::move(tokens), body});
    }
    return lines;
}

[[noreturn]] void fail_at(const std::string& source, size_t line, const std::string& what) {
    throw std::invalid_argument(source + ":" + std::to_string(line) + ": " + what);
}

bool is_number(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c);
    });
}

// Canonical indices for a coordinate's tokens: numeric sort when everything
// is a number, lexicographic otherwise.
std::vector<std::string> sorted_labels(const std::set<std::string>& tokens) {
    std::vector<std::string> labels(tokens.begin(), tokens.end());
    if (std::all_of(labels.begin(), labels.end(), is_number))
        std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
            return std::stoull(a) < std::stoull(b);
        });
    return labels;
}

uint32_t label_index(const std::vector<std::string>& labels, const std::string& token) {
    auto it = std::find(labels.begin(), labels.end(), token);
    return static_cast<uint32_t>(it - labels.begin());
}

Document parse_grid(const std::vector<Line>& lines, const std::string& source) {
    Document doc;
    const Line& header = lines.front();
    uint32_t rows = 0, cols = 0, syms = 0;
    for (const auto& tok : header.tokens) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) fail_at(source, header.number, "bad header token " + tok);
        std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
        if (!is_number(value)) fail_at(source, header.number, "bad count in " + tok);
        uint32_t n = static_cast<uint32_t>(std::stoul(value));
        if (key == "rows") rows = n;
        else if (key == "cols") cols = n;
        else if (key == "syms") syms = n;
        else fail_at(source, header.number, "unknown header key " + key);
    }
    if (rows == 0 || cols == 0 || syms == 0)
        fail_at(source, header.number, "header must declare positive rows, cols, syms");

    std::vector<std::vector<std::string>> sides(1);
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].tokens.size() == 1 && lines[i].tokens[0] == "---") {
            sides.emplace_back();
            continue;
        }
        if (lines[i].tokens.size() != cols)
            fail_at(source, lines[i].number,
                    "expected " + std::to_string(cols) + " cells, got " +
                        std::to_string(lines[i].tokens.size()));
        for (const auto& tok : lines[i].tokens) sides.back().push_back(tok);
    }
    if (sides.size() > 2) fail_at(source, lines.back().number, "more than two grids");
    for (const auto& side : sides)
        if (side.size() != static_cast<size_t>(rows) * cols)
            fail_at(source, lines.back().number, "grid does not have rows x cols cells");

    std::set<std::string> sym_tokens;
    for (const auto& side : sides)
        for (const auto& tok : side)
            if (tok != "-") sym_tokens.insert(tok);
    bool numeric = std::all_of(sym_tokens.begin(), sym_tokens.end(), is_number) &&
                   std::all_of(sym_tokens.begin(), sym_tokens.end(), [&](const std::string& t) {
                       return std::stoull(t) < syms;
                   });
    std::vector<std::string> sym_labels;
    if (numeric) {
        for (uint32_t s = 0; s < syms; ++s) sym_labels.push_back(std::to_string(s));
    } else {
        sym_labels = sorted_labels(sym_tokens);
        if (sym_labels.size() != syms)
            fail_at(source, header.number,
                    "with word symbols, the grid must use exactly syms distinct tokens");
    }
    auto side_to_pls = [&](const std::vector<std::string>& cells) {
        std::vector<Triple> entries;
        for (uint32_t r = 0; r < rows; ++r)
            for (uint32_t c = 0; c < cols; ++c) {
                const std::string& tok = cells[r * cols + c];
                if (tok == "-") continue;
                uint32_t s = numeric ? static_cast<uint32_t>(std::stoul(tok))
                                     : label_index(sym_labels, tok);
                entries.push_back({r, c, s});
            }
        return PartialLatinSquare(rows, cols, syms, std::move(entries));
    };
    for (uint32_t r = 0; r < rows; ++r) doc.labels.rows.push_back(std::to_string(r));
    for (uint32_t c = 0; c < cols; ++c) doc.labels.cols.push_back(std::to_string(c));
    doc.labels.syms = sym_labels;
    if (sides.size() == 1) {
        doc.format = DocFormat::grid_pls;
        doc.pls = side_to_pls(sides[0]);
    } else {
        doc.format = DocFormat::grid_bitrade;
        doc.bitrade = Bitrade(side_to_pls(sides[0]), side_to_pls(sides[1]));
    }
    return doc;
}

Document parse_triples(const std::vector<Line>& lines, const std::string& source) {
    Document doc;
    std::vector<std::vector<std::array<std::string, 3>>> sides(1);
    for (const auto& line : lines) {
        if (line.tokens.size() == 1 && line.tokens[0] == "---") {
            sides.emplace_back();
            continue;
        }
        if (line.tokens.size() != 3)
            fail_at(source, line.number, "expected 'row col sym'");
        sides.back().push_back({line.tokens[0], line.tokens[1], line.tokens[2]});
    }
    if (sides.size() > 2) fail_at(source, lines.back().number, "more than two entry lists");
    if (sides.back().empty()) fail_at(source, lines.back().number, "empty entry list");
    std::set<std::string> row_toks, col_toks, sym_toks;
    for (const auto& side : sides)
        for (const auto& t : side) {
            row_toks.insert(t[0]);
            col_toks.insert(t[1]);
            sym_toks.insert(t[2]);
        }
    doc.labels.rows = sorted_labels(row_toks);
    doc.labels.cols = sorted_labels(col_toks);
    doc.labels.syms = sorted_labels(sym_toks);
    auto side_to_pls = [&](const std::vector<std::array<std::string, 3>>& triples) {
        std::vector<Triple> entries;
        for (const auto& t : triples)
            entries.push_back({label_index(doc.labels.rows, t[0]),
                               label_index(doc.labels.cols, t[1]),
                               label_index(doc.labels.syms, t[2])});
        return PartialLatinSquare(static_cast<uint32_t>(doc.labels.rows.size()),
                                  static_cast<uint32_t>(doc.labels.cols.size()),
                                  static_cast<uint32_t>(doc.labels.syms.size()),
                                  std::move(entries));
    };
    if (sides.size() == 1) {
        doc.format = DocFormat::triples_pls;
        doc.pls = side_to_pls(sides[0]);
    } else {
        doc.format = DocFormat::triples_bitrade;
        doc.bitrade = Bitrade(side_to_pls(sides[0]), side_to_pls(sides[1]));
    }
    return doc;
}

Document parse_cayley(const std::vector<Line>& lines, const std::string& source) {
    Document doc;
    doc.format = DocFormat::cayley;
    uint32_t n = static_cast<uint32_t>(std::stoul(lines.front().tokens[0]));
    if (n == 0) fail_at(source, lines.front().number, "order must be positive");
    if (lines.size() != n + 1) fail_at(source, lines.front().number,
                                       "expected " + std::to_string(n) + " table rows");
    CayleyGroup g;
    g.order = n;
    g.name = source;
    for (uint32_t r = 0; r < n; ++r) {
        const Line& line = lines[r + 1];
        if (line.tokens.size() != n)
            fail_at(source, line.number, "expected " + std::to_string(n) + " entries");
        for (const auto& tok : line.tokens) {
            if (!is_number(tok)) fail_at(source, line.number, "bad element index " + tok);
            uint32_t v = static_cast<uint32_t>(std::stoul(tok));
            if (v >= n) fail_at(source, line.number, "element index out of range");
            g.table.push_back(v);
        }
    }
    doc.cayley = std::move(g);
    return doc;
}

Document parse_constellation(const std::vector<Line>& lines, const std::string& source) {
    Document doc;
    doc.format = DocFormat::constellation;
    const Line& header = lines.front();
    uint32_t degree = static_cast<uint32_t>(std::stoul(header.tokens[0]));
    uint32_t k = static_cast<uint32_t>(std::stoul(header.tokens[1]));
    if (lines.size() != k + 1)
        fail_at(source, header.number, "expected " + std::to_string(k) + " permutations");
    Constellation c;
    c.degree = degree;
    for (uint32_t i = 0; i < k; ++i) {
        std::string text;
        for (const auto& tok : lines[i + 1].tokens) text += tok;
        try {
            c.maps.push_back(Permutation::from_cycles(text, degree));
        } catch (const std::invalid_argument& e) {
            fail_at(source, lines[i + 1].number, e.what());
        }
    }
    doc.constellation = std::move(c);
    return doc;
}

} // namespace

Document parse_document(const std::string& text, const std::string& source_name) {
    auto lines = tokenize(text);
    if (lines.empty()) throw std::invalid_argument(source_name + ": empty document");
    const Line& first = lines.front();
    Document doc;
    if (first.tokens[0].rfind("rows=", 0) == 0)
        doc = parse_grid(lines, source_name);
    else if (first.tokens.size() == 1 && is_number(first.tokens[0]))
        doc = parse_cayley(lines, source_name);
    else if (first.tokens.size() == 2 && is_number(first.tokens[0]) &&
             is_number(first.tokens[1]))
        doc = parse_constellation(lines, source_name);
    else if (first.tokens.size() == 3)
        doc = parse_triples(lines, source_name);
    else
        throw std::invalid_argument(source_name + ":" + std::to_string(first.number) +
                                    ": unrecognized format");
    doc.source = source_name;
    return doc;
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument(path + ": cannot open");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str(), std::filesystem::path(path).filename().string());
}

namespace {

std::string print_grid_side(const PartialLatinSquare& p, const LabelMap& labels) {
    std::ostringstream out;
    for (uint32_t r = 0; r < p.n_rows(); ++r) {
        for (uint32_t c = 0; c < p.n_cols(); ++c) {
            if (c) out << ' ';
            auto s = p.sym_at(r, c);
            out << (s ? labels.syms[*s] : "-");
        }
        out << '\n';
    }
    return out.str();
}

std::string print_triples_side(const PartialLatinSquare& p, const LabelMap& labels) {
    std::ostringstream out;
    for (const auto& t : p.entries())
        out << labels.rows[t.row] << ' ' << labels.cols[t.col] << ' ' << labels.syms[t.sym]
            << '\n';
    return out.str();
}

} // namespace

std::string print_document(const Document& doc) {
    std::ostringstream out;
    switch (doc.format) {
        case DocFormat::grid_pls:
        case DocFormat::grid_bitrade: {
            const PartialLatinSquare& first =
                doc.pls ? *doc.pls : doc.bitrade->circ();
            out << "rows=" << first.n_rows() << " cols=" << first.n_cols()
                << " syms=" << first.n_syms() << '\n';
            if (doc.pls) {
                out << print_grid_side(*doc.pls, doc.labels);
            } else {
                out << print_grid_side(doc.bitrade->circ(), doc.labels);
                out << "---\n";
                out << print_grid_side(doc.bitrade->star(), doc.labels);
            }
            break;
        }
        case DocFormat::triples_pls:
            out << print_triples_side(*doc.pls, doc.labels);
            break;
        case DocFormat::triples_bitrade:
            out << print_triples_side(doc.bitrade->circ(), doc.labels);
            out << "---\n";
            out << print_triples_side(doc.bitrade->star(), doc.labels);
            break;
        case DocFormat::cayley: {
            const CayleyGroup& g = *doc.cayley;
            out << g.order << '\n';
            for (uint32_t r = 0; r < g.order; ++r) {
                for (uint32_t c = 0; c < g.order; ++c) {
                    if (c) out << ' ';
                    out << g.mul(r, c);
                }
                out << '\n';
            }
            break;
        }
        case DocFormat::constellation: {
            const Constellation& c = *doc.constellation;
            out << c.degree << ' ' << c.maps.size() << '\n';
            for (const auto& m : c.maps) out << m.cycle_string() << '\n';
            break;
        }
    }
    return out.str();
}

std::string cycle_string_with_labels(const Permutation& p,
                                     const std::vector<std::string>& labels) {
    auto cycs = p.cycles();
    if (cycs.empty()) return "()";
    std::ostringstream out;
    for (const auto& c : cycs) {
        out << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out << ',';
            out << labels[c[i]];
        }
        out << ')';
    }
    return out.str();
}

std::string isotopism_string(const Isotopism& g, const LabelMap& labels) {
    return "(" + cycle_string_with_labels(g.rows, labels.rows) + ", " +
           cycle_string_with_labels(g.cols, labels.cols) + ", " +
           cycle_string_with_labels(g.syms, labels.syms) + ")";
}

nlohmann::ordered_json report_to_json(const VerifierReport& report) {
    nlohmann::ordered_json j;
    j["fixture"] = report.fixture;
    j["operation"] = report.operation;
    j["hypotheses"] = nlohmann::ordered_json::array();
    for (const auto& h : report.hypotheses) {
        nlohmann::ordered_json hj;
        hj["name"] = h.name;
        hj["holds"] = h.holds;
        if (!h.note.empty()) hj["note"] = h.note;
        j["hypotheses"].push_back(hj);
    }
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : report.claims) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["status"] = to_string(c.status);
        if (!c.witness.empty()) cj["witness"] = c.witness;
        j["claims"].push_back(cj);
    }
    if (!report.info.empty()) {
        nlohmann::ordered_json ij;
        for (const auto& [k, v] : report.info) ij[k] = v;
        j["info"] = ij;
    }
    j["overall"] = to_string(report.overall());
    return j;
}

std::vector<VerifierReport> verify_document(const Document& doc, const SweepOptions& options) {
    std::vector<VerifierReport> reports;
    auto run = [&](const char* name, auto&& fn) {
        try {
            reports.push_back(fn());
        } catch (const cap_exceeded& e) {
            VerifierReport r;
            r.operation = name;
            r.claims.push_back({"computation", ClaimStatus::capped, e.what()});
            reports.push_back(std::move(r));
        }
    };
    switch (doc.format) {
        case DocFormat::grid_bitrade:
        case DocFormat::triples_bitrade: {
            const Bitrade& b = *doc.bitrade;
            run("tau_axioms", [&] { return verify_tau_axioms(b); });
            run("regular_bitrade_reconstruction",
                [&] { return verify_regular_bitrade_reconstruction(b, options.caps); });
            run("genus0_mate_uniqueness", [&] {
                return verify_genus0_mate_uniqueness(b.circ(), options.caps,
                                                     options.mate_limit);
            });
            run("genus0_autotopism_equality",
                [&] { return verify_genus0_autotopism_equality(b, options.caps); });
            run("tau_centralizer_embedding",
                [&] { return embed_tau_automorphisms(b, options.caps); });
            run("atop_tau_isomorphism",
                [&] { return verify_atop_tau_isomorphism(b, options.caps); });
            break;
        }
        case DocFormat::grid_pls:
        case DocFormat::triples_pls:
            run("genus0_mate_uniqueness", [&] {
                return verify_genus0_mate_uniqueness(*doc.pls, options.caps,
                                                     options.mate_limit);
            });
            break;
        case DocFormat::cayley: {
            const CayleyGroup& g = *doc.cayley;
            run("regular_representation_centralizer",
                [&] { return verify_regular_representation_centralizer(g, options.caps); });
            run("group_construction", [&] {
                VerifierReport combined;
                combined.operation = "group_construction";
                combined.hypothesis("valid_table", validate_cayley(g).ok());
                if (!combined.hypotheses_met()) return combined;
                auto triads = construction_triads(g);
                combined.note("construction_triads", std::to_string(triads.size()));
                size_t failures = 0;
                for (const auto& triad : triads) {
                    VerifierReport one = verify_group_construction(triad);
                    if (one.any_failure()) {
                        ++failures;
                        combined.claims.push_back(
                            {"triad_a" + std::to_string(triad.a) + "_b" +
                                 std::to_string(triad.b),
                             ClaimStatus::fail, "construction claims failed"});
                    }
                }
                combined.claim("all_triads_pass", failures == 0,
                               std::to_string(failures) + " failing triads");
                return combined;
            });
            break;
        }
        case DocFormat::constellation:
            run("constellation",
                [&] { return constellation_checks(*doc.constellation, options.caps); });
            break;
    }
    return reports;
}

SweepResult run_sweep(const std::string& dir, const SweepOptions& options) {
    namespace fs = std::filesystem;
    std::vector<std::string> paths;
    if (fs::exists(dir))
        for (const auto& entry : fs::recursive_directory_iterator(dir))
            if (entry.is_regular_file()) paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());

    // the seed shuffles only the execution order; rows are re-sorted below,
    // so output is identical for every seed
    std::vector<size_t> order(paths.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (options.seed != 0) {
        std::mt19937_64 rng(options.seed);
        std::shuffle(order.begin(), order.end(), rng);
    }

    auto process = [&](const std::string& path) {
        std::vector<SweepRow> rows;
        std::string name = fs::path(path).filename().string();
        try {
            Document doc = load_document(path);
            for (const auto& report : verify_document(doc, options))
                rows.push_back({name, report.operation, report.overall(),
                                report.any_failure() ? "claim failed" : ""});
        } catch (const std::exception& e) {
            rows.push_back({name, "parse", ClaimStatus::fail, e.what()});
        }
        return rows;
    };

    std::vector<std::vector<SweepRow>> results(paths.size());
    if (options.parallel) {
        std::vector<std::future<std::vector<SweepRow>>> futures(paths.size());
        for (size_t i : order)
            futures[i] = std::async(std::launch::async, process, paths[i]);
        for (size_t i = 0; i < paths.size(); ++i) results[i] = futures[i].get();
    } else {
        for (size_t i : order) results[i] = process(paths[i]);
    }

    SweepResult sweep;
    for (auto& rows : results)
        for (auto& row : rows) sweep.rows.push_back(std::move(row));
    std::sort(sweep.rows.begin(), sweep.rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tie(a.fixture, a.operation) < std::tie(b.fixture, b.operation);
    });
    sweep.any_fail = std::any_of(sweep.rows.begin(), sweep.rows.end(), [](const SweepRow& r) {
        return r.status == ClaimStatus::fail;
    });
    return sweep;
}

nlohmann::ordered_json SweepResult::to_json() const {
    nlohmann::ordered_json j;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json rj;
        rj["fixture"] = row.fixture;
        rj["operation"] = row.operation;
        rj["status"] = to_string(row.status);
        if (!row.detail.empty()) rj["detail"] = row.detail;
        j["rows"].push_back(rj);
    }
    j["failures"] = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) {
        return r.status == ClaimStatus::fail;
    });
    return j;
}

std::string SweepResult::to_table() const {
    size_t wf = 8, wo = 9;
    for (const auto& r : rows) {
        wf = std::max(wf, r.fixture.size());
        wo = std::max(wo, r.operation.size());
    }
    std::ostringstream out;
    auto pad = [](const std::string& s, size_t w) {
        return s + std::string(w - s.size() + 2, ' ');
    };
    out << pad("fixture", wf) << pad("operation", wo) << "status\n";
    for (const auto& r : rows) {
        out << pad(r.fixture, wf) << pad(r.operation, wo) << to_string(r.status);
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << '\n';
    }
    return out.str();
}

} // namespace lbt
