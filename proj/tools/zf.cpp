// Command-line front end: zero forcing closures, forcing and immune sets,
// their dual clutters, uniform realizations and the small-census tables.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zf/canonical.hpp"
#include "zf/catalog.hpp"
#include "zf/clutter.hpp"
#include "zf/constructions.hpp"
#include "zf/errors.hpp"
#include "zf/families.hpp"
#include "zf/forcing.hpp"
#include "zf/hypergraph.hpp"
#include "zf/io.hpp"
#include "zf/reference.hpp"

namespace {

/// Bad flag values found after CLI11 parsing; reported like usage errors.
struct UsageError {
    std::string message;
};

zf::VertexSet set_flag(const std::string& text, int n, const char* flag) {
    try {
        return zf::parse_vertex_list(text, n);
    } catch (const zf::ParseError& e) {
        throw UsageError{std::string(flag) + ": " + e.what()};
    }
}

std::string vertex_list(zf::VertexSet s) {
    if (s.empty()) return "-";
    std::string out;
    for (int v : s.members()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

std::string set_list(const std::vector<zf::VertexSet>& sets) {
    if (sets.empty()) return "-";
    std::string out;
    for (zf::VertexSet s : sets) {
        if (!out.empty()) out += ' ';
        out += s.to_string();
    }
    return out;
}

std::string index_list(const std::vector<zf::CatalogIndex>& list) {
    if (list.empty()) return "-";
    std::string out;
    for (const zf::CatalogIndex& idx : list) {
        if (!out.empty()) out += ' ';
        out += idx.to_string();
    }
    return out;
}

void print_clutter(const zf::Clutter& c, bool json) {
    if (json)
        zf::write_clutter_json(std::cout, c);
    else
        zf::write_clutter_text(std::cout, c);
}

void print_hypergraph(const zf::Hypergraph& h, bool json) {
    if (json)
        zf::write_hypergraph_json(std::cout, h);
    else
        zf::write_hypergraph_text(std::cout, h);
}

int run_closure(const std::string& input, const std::string& rule_text,
                const std::string& black_text) {
    const zf::Hypergraph h = zf::read_hypergraph_file(input);
    const zf::Rule rule = zf::parse_rule(rule_text);
    const zf::VertexSet black = set_flag(black_text, h.n(), "--black");
    const zf::ClosureResult result = zf::closure(h, rule, black);
    std::cout << "closure: " << vertex_list(result.black) << "\n";
    int step = 0;
    for (const zf::ForcingStep& s : result.trace.steps)
        std::cout << "step " << ++step << ": edge " << s.edge.to_string() << " trigger "
                  << s.trigger.to_string() << " forced " << s.newly_black.to_string() << "\n";
    return 0;
}

int run_check_forcing(const std::string& input, const std::string& rule_text,
                      const std::string& set_text) {
    const zf::Hypergraph h = zf::read_hypergraph_file(input);
    const zf::Rule rule = zf::parse_rule(rule_text);
    const zf::VertexSet s = set_flag(set_text, h.n(), "--set");
    const bool forcing = zf::is_forcing(h, rule, s);
    std::cout << "forcing: " << (forcing ? "yes" : "no") << "\n";
    return 0;
}

int run_check_immune(const std::string& input, const std::string& rule_text,
                     const std::string& set_text, const std::string& method) {
    const zf::Hypergraph h = zf::read_hypergraph_file(input);
    const zf::Rule rule = zf::parse_rule(rule_text);
    const zf::VertexSet s = set_flag(set_text, h.n(), "--set");
    const bool immune = method == "nbhd" ? zf::is_immune_nbhd(h, rule, s)
                                         : zf::is_immune(h, rule, s);
    std::cout << "immune: " << (immune ? "yes" : "no") << "\n";
    return 0;
}

int run_sigma(const std::string& input, const std::string& x_text, const std::string& edge_text) {
    const zf::Hypergraph h = zf::read_hypergraph_file(input);
    const zf::VertexSet x = set_flag(x_text, h.n(), "--x");
    const zf::VertexSet a = set_flag(edge_text, h.n(), "--edge");
    std::cout << "sigma1: " << set_list(zf::sigma1(h, x, a)) << "\n";
    std::cout << "sigma2: " << set_list(zf::sigma2(h, x, a)) << "\n";
    return 0;
}

int run_forcing_number(const std::string& input, const std::string& rule_text) {
    const zf::Hypergraph h = zf::read_hypergraph_file(input);
    std::cout << "forcing-number: " << zf::forcing_number(h, zf::parse_rule(rule_text)) << "\n";
    return 0;
}

int run_families(const std::string& input, const std::string& rule_text,
                 const std::string& which, bool direct, int jobs, bool json) {
    const zf::Hypergraph h = zf::read_hypergraph_file(input);
    const zf::Rule rule = zf::parse_rule(rule_text);
    const zf::FamilyOptions opt{0, jobs};
    const auto immune_family = [&] {
        return direct ? zf::minimal_immune_family_direct(h, rule, opt)
                      : zf::minimal_immune_family(h, rule, opt);
    };
    if (which == "forcing") {
        print_clutter(zf::minimal_forcing_family(h, rule, opt), json);
    } else if (which == "immune") {
        print_clutter(immune_family(), json);
    } else {
        std::cout << "# forcing\n";
        print_clutter(zf::minimal_forcing_family(h, rule, opt), json);
        std::cout << "# immune\n";
        print_clutter(immune_family(), json);
    }
    return 0;
}

int run_transversal(const std::string& input, bool json) {
    const auto [n, family] = zf::read_family_file(input);
    print_clutter(zf::transversal(zf::minimize(n, family)), json);
    return 0;
}

int run_construct(const std::string& kind, int n, int k, bool json) {
    zf::Hypergraph h;
    if (kind == "complete")
        h = zf::complete_hypergraph(n, k);
    else if (kind == "r1-forcing")
        h = zf::r1_forcing_realization(n, k);
    else if (kind == "r1-immune")
        h = zf::r1_immune_realization(n, k);
    else if (kind == "r2-forcing")
        h = zf::r2_forcing_realization(n, k);
    else if (kind == "r2-immune")
        h = zf::r2_immune_realization(n, k);
    else if (kind == "graph-forcing")
        h = zf::graph_forcing_realization(n, k);
    else
        h = zf::graph_immune_realization(n, k);
    print_hypergraph(h, json);
    return 0;
}

int run_catalog(int n) {
    int j = 0;
    for (const zf::Hypergraph& h : zf::enumerate_covering_clutters(n))
        std::cout << n << ',' << ++j << '\t' << set_list(h.edges()) << "\n";
    return 0;
}

int run_tables(int n_max, bool inline_cells, bool paper_check, int jobs) {
    const zf::Table1 table1 = zf::build_table1(n_max, jobs);
    const auto table2 = zf::build_table2(table1);

    if (paper_check) {
        const auto report = zf::reference::match_census(table1, table2);
        int passed = 0;
        for (const auto& line : report.lines) {
            std::cout << line.label << ": " << (line.pass ? "PASS" : "FAIL") << "\n";
            if (!line.pass)
                std::cout << "  " << line.detail << "\n";
            else
                ++passed;
        }
        std::cout << "paper-check: " << (report.all_pass() ? "PASS" : "FAIL") << " (" << passed
                  << "/" << report.lines.size() << ")\n";
        return report.all_pass() ? 0 : 1;
    }

    const auto family_cell = [&](const zf::Clutter& family, zf::CatalogIndex cls) {
        return inline_cells ? set_list(family.members) : cls.to_string();
    };
    std::cout << "# table 1: classes and their families\n";
    std::cout << "index\tedges\tF1\tF2\tI1\tI2\n";
    for (const zf::CatalogEntry& e : table1.entries())
        std::cout << e.index.to_string() << '\t' << set_list(e.hypergraph.edges()) << '\t'
                  << family_cell(e.f1, e.f1_class) << '\t' << family_cell(e.f2, e.f2_class)
                  << '\t' << family_cell(e.i1, e.i1_class) << '\t'
                  << family_cell(e.i2, e.i2_class) << "\n";

    const auto realization_cell = [&](const std::vector<zf::CatalogIndex>& list) {
        if (!inline_cells) return index_list(list);
        if (list.empty()) return std::string("-");
        std::string out;
        for (zf::CatalogIndex idx : list) {
            if (!out.empty()) out += " | ";
            out += set_list(table1.at(idx).hypergraph.edges());
        }
        return out;
    };
    std::cout << "# table 2: classes realized as families\n";
    std::cout << "index\tF1-realizations\tF2-realizations\tI1-realizations\tI2-realizations\n";
    for (const zf::Table2Row& row : table2)
        std::cout << row.delta.to_string() << '\t' << realization_cell(row.f1_realizations)
                  << '\t' << realization_cell(row.f2_realizations) << '\t'
                  << realization_cell(row.i1_realizations) << '\t'
                  << realization_cell(row.i2_realizations) << "\n";
    return 0;
}

int run_verify(const std::string& input, const std::string& rule_text, int jobs) {
    const zf::Hypergraph h = zf::read_hypergraph_file(input);
    const zf::FamilyOptions opt{0, jobs};

    std::vector<zf::Rule> rules;
    if (!rule_text.empty()) {
        rules.push_back(zf::parse_rule(rule_text));
    } else {
        if (h.is_graph()) rules.push_back(zf::Rule::R0);
        rules.push_back(zf::Rule::R1);
        rules.push_back(zf::Rule::R2);
    }

    bool all_ok = true;
    for (zf::Rule rule : rules) {
        const bool dual = zf::verify_duality(h, rule, opt);
        all_ok = all_ok && dual;
        std::cout << "duality " << zf::rule_name(rule) << ": " << (dual ? "ok" : "FAIL") << "\n";
    }
    for (zf::Rule rule : rules) {
        bool agree = true;
        for (std::uint64_t mask = 1; mask < (1ULL << h.n()); ++mask) {
            const zf::VertexSet x = zf::VertexSet::from_bits(mask);
            if (zf::is_immune(h, rule, x) != zf::is_immune_nbhd(h, rule, x)) {
                agree = false;
                break;
            }
        }
        all_ok = all_ok && agree;
        std::cout << "characterization " << zf::rule_name(rule) << ": " << (agree ? "ok" : "FAIL")
                  << "\n";
    }
    std::cout << "verify: " << (all_ok ? "ok" : "FAIL") << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero forcing on graphs and hypergraphs: closures, forcing and immune sets,"
                 " dual clutters, realizations and the small-class census"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "zf 0.1.0");

    int rc = 0;

    // shared option storage; each subcommand binds the pieces it needs
    std::string input = "-", rule, set_text, black_text, x_text, edge_text;
    std::string method = "closure", which_family = "forcing", kind;
    bool direct = false, json = false, inline_cells = false, paper_check = false;
    int n = 0, k = 0, n_max = 4, jobs = 1;

    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "hypergraph file, or - for standard input")
            ->required();
    };
    const auto add_rule = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--rule", rule, "colour change rule")
                        ->check(CLI::IsMember({"r0", "r1", "r2"}));
        if (required) opt->required();
    };
    const auto add_jobs = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", jobs, "worker threads; the output does not depend on it")
            ->check(CLI::PositiveNumber);
    };

    auto* closure_cmd = app.add_subcommand("closure", "closure of a black set, with trace");
    add_rule(closure_cmd);
    closure_cmd->add_option("--black", black_text, "initially black vertices, e.g. 1,2")
        ->required();
    add_input(closure_cmd);
    closure_cmd->callback([&] { rc = run_closure(input, rule, black_text); });

    auto* forcing_cmd = app.add_subcommand("check-forcing", "does the set force everything");
    add_rule(forcing_cmd);
    forcing_cmd->add_option("--set", set_text, "candidate set, e.g. 1,2")->required();
    add_input(forcing_cmd);
    forcing_cmd->callback([&] { rc = run_check_forcing(input, rule, set_text); });

    auto* immune_cmd = app.add_subcommand("check-immune", "can the set stay white");
    add_rule(immune_cmd);
    immune_cmd->add_option("--set", set_text, "candidate set, e.g. 1,2")->required();
    immune_cmd->add_option("--method", method, "closure (run the dynamics) or nbhd")
        ->check(CLI::IsMember({"closure", "nbhd"}));
    add_input(immune_cmd);
    immune_cmd->callback([&] { rc = run_check_immune(input, rule, set_text, method); });

    auto* sigma_cmd = app.add_subcommand("sigma", "witness edges for immunity at an edge");
    sigma_cmd->add_option("--x", x_text, "candidate immune set")->required();
    sigma_cmd->add_option("--edge", edge_text, "edge to inspect")->required();
    add_input(sigma_cmd);
    sigma_cmd->callback([&] { rc = run_sigma(input, x_text, edge_text); });

    auto* number_cmd = app.add_subcommand("forcing-number", "smallest forcing set size");
    add_rule(number_cmd);
    add_input(number_cmd);
    number_cmd->callback([&] { rc = run_forcing_number(input, rule); });

    auto* families_cmd = app.add_subcommand("families", "minimal forcing/immune families");
    add_rule(families_cmd);
    add_input(families_cmd);
    families_cmd->add_option("--family", which_family, "forcing, immune or both")
        ->check(CLI::IsMember({"forcing", "immune", "both"}));
    families_cmd->add_flag("--direct", direct,
                           "recompute the immune family by direct scan instead of duality");
    families_cmd->add_flag("--json", json, "JSON output");
    add_jobs(families_cmd);
    families_cmd->callback([&] { rc = run_families(input, rule, which_family, direct, jobs, json); });

    auto* transversal_cmd = app.add_subcommand("transversal", "blocker of a set family");
    add_input(transversal_cmd);
    transversal_cmd->add_flag("--json", json, "JSON output");
    transversal_cmd->callback([&] { rc = run_transversal(input, json); });

    auto* construct_cmd = app.add_subcommand("construct", "named hypergraphs and realizations");
    construct_cmd
        ->add_option("kind", kind,
                     "complete, r1-forcing, r1-immune, r2-forcing, r2-immune, graph-forcing, "
                     "graph-immune")
        ->required()
        ->check(CLI::IsMember({"complete", "r1-forcing", "r1-immune", "r2-forcing", "r2-immune",
                               "graph-forcing", "graph-immune"}));
    construct_cmd->add_option("--n", n, "ground set size")->required();
    construct_cmd->add_option("--k", k, "uniformity of the target family")->required();
    construct_cmd->add_flag("--json", json, "JSON output");
    construct_cmd->callback([&] { rc = run_construct(kind, n, k, json); });

    auto* catalog_cmd = app.add_subcommand("catalog", "covering clutter classes on n vertices");
    catalog_cmd->add_option("--n", n, "ground set size")->required();
    catalog_cmd->callback([&] { rc = run_catalog(n); });

    auto* tables_cmd = app.add_subcommand("tables", "the census tables up to n-max");
    tables_cmd->add_option("--n-max", n_max, "largest ground set size (default 4)");
    tables_cmd->add_flag("--inline", inline_cells, "print families as edge lists, not indices");
    tables_cmd->add_flag("--paper-check", paper_check,
                         "compare the n <= 4 census against the published tables");
    add_jobs(tables_cmd);
    tables_cmd->callback([&] { rc = run_tables(n_max, inline_cells, paper_check, jobs); });

    auto* verify_cmd = app.add_subcommand("verify", "duality and characterization checks");
    add_input(verify_cmd);
    add_rule(verify_cmd, false);
    add_jobs(verify_cmd);
    verify_cmd->callback([&] { rc = run_verify(input, rule, jobs); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.message << "\n";
        return 2;
    } catch (const zf::Error& e) {
        std::cerr << "error [" << e.code() << "] " << e.what() << "\n";
        return 1;
    }
    return rc;
}
