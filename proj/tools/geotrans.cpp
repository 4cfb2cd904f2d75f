// Command line front end: construct the graph families, run property
// reports on graph/group files, and execute the verification suite.
//
// Exit codes: 0 success, 1 a verification case failed, 2 invalid input,
// 3 a resource cap was exceeded (report emits what it computed first).

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "geotrans/autgrp.hpp"
#include "geotrans/construct.hpp"
#include "geotrans/errors.hpp"
#include "geotrans/graph.hpp"
#include "geotrans/io.hpp"
#include "geotrans/onanscott.hpp"
#include "geotrans/symmetry.hpp"
#include "geotrans/verify_cases.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using geotrans::json;

struct Options {
    std::string family;
    std::vector<int> params;
    std::string graph_path;
    std::string group_path;
    std::string output = "out";
    bool output_given = false;
    int max_s = 2;
    bool classify = true;
    std::string caps_text;
    std::string case_id;
};

geotrans::Caps resolve_caps(const Options& opt) {
    if (!opt.caps_text.empty()) return geotrans::caps_from_string(opt.caps_text);
    return geotrans::caps_from_env();
}

int require_params(const Options& opt, std::size_t count, const char* shape) {
    if (opt.params.size() != count)
        throw geotrans::InvalidInput("family " + opt.family + " expects --params " + shape);
    return opt.params.empty() ? 0 : opt.params[0];
}

geotrans::Graph load_input_graph(const Options& opt) {
    if (opt.graph_path.empty())
        throw geotrans::InvalidInput("family " + opt.family + " needs --graph with an input file");
    return geotrans::read_graph_file(opt.graph_path);
}

json labels_to_json(const std::vector<int>& labels) {
    json j;
    j["schema"] = 1;
    j["labels"] = labels;
    return j;
}

// Constructed output: the graph, and the natural action when the family has
// one. Families derived from an input graph carry no group.
struct Constructed {
    geotrans::Graph graph;
    std::optional<geotrans::LabeledAction> action;
};

Constructed construct_family(const Options& opt, const geotrans::Caps& caps) {
    using namespace geotrans;
    const std::string& f = opt.family;

    if (f == "hamming" || f == "hamming-complement") {
        require_params(opt, 2, "d,n");
        int d = opt.params[0], n = opt.params[1];
        Graph g = hamming(d, n, caps);
        if (f == "hamming-complement") g = complement(g);
        PermGroup w = wreath_product_action(sym(n), d, caps);
        std::vector<int> labels(g.n());
        for (int i = 0; i < g.n(); ++i) labels[i] = i;
        return {g, LabeledAction{std::move(w), std::move(labels)}};
    }
    if (f == "kneser") {
        require_params(opt, 2, "n,k");
        int n = opt.params[0], k = opt.params[1];
        Graph g = kneser(n, k);
        auto act = induced_set_action(sym(n), k, caps);
        std::vector<int> labels(g.n());
        for (int i = 0; i < g.n(); ++i) labels[i] = i;
        return {g, LabeledAction{std::move(act.group), std::move(labels)}};
    }
    if (f == "two-coordinate") {
        require_params(opt, 2, "k,m");
        int k = opt.params[0], m = opt.params[1];
        Graph g = two_coordinate_graph(k, m, caps);
        PermGroup w = wreath_product_action(sym(m), k, caps);
        std::vector<int> labels(g.n());
        for (int i = 0; i < g.n(); ++i) labels[i] = i;
        return {g, LabeledAction{std::move(w), std::move(labels)}};
    }
    if (f == "halfcube") return {halfcube(require_params(opt, 1, "n")), std::nullopt};
    if (f == "foldedcube") return {foldedcube(require_params(opt, 1, "n")), std::nullopt};
    if (f == "folded-halfcube")
        return {folded_halfcube(require_params(opt, 1, "n")), std::nullopt};
    if (f == "coset-psl2") {
        int p = require_params(opt, 1, "p");
        auto seed = find_psl2_s4_seed(p, caps);
        auto res = coset_graph(psl2(p), seed.subgroup_gens, seed.g, caps);
        return {std::move(res.graph), std::move(res.action)};
    }
    if (f == "pg-incidence") {
        int q = require_params(opt, 1, "q");
        auto res = pg_incidence(q);
        return {std::move(res.graph), std::move(res.action)};
    }
    if (f == "foster") {
        require_params(opt, 0, "(none)");
        return {foster_graph(), std::nullopt};
    }
    if (f == "clique-graph-of") return {clique_graph(load_input_graph(opt)).graph, std::nullopt};
    if (f == "incidence-graph-of")
        return {incidence_graph(load_input_graph(opt)).graph, std::nullopt};
    if (f == "double-cover-of")
        return {standard_double_cover(load_input_graph(opt)), std::nullopt};
    if (f == "distance2-of") {
        int side = opt.params.empty() ? 0 : require_params(opt, 1, "side");
        return {distance2_graph(load_input_graph(opt), side), std::nullopt};
    }
    throw geotrans::InvalidInput("unknown family: " + f);
}

int cmd_construct(const Options& opt) {
    geotrans::Caps caps = resolve_caps(opt);
    Constructed c = construct_family(opt, caps);
    std::string prefix = opt.output_given ? opt.output : opt.family;

    std::string graph_path = prefix + ".graph.json";
    geotrans::write_json_file(geotrans::graph_to_json(c.graph), graph_path);
    std::cout << "wrote " << graph_path << " (" << c.graph.n() << " vertices, "
              << c.graph.edge_count() << " edges)\n";

    if (c.action) {
        std::string group_path = prefix + ".group.json";
        geotrans::write_json_file(geotrans::group_to_json(c.action->group), group_path);
        std::cout << "wrote " << group_path << " (order " << c.action->group.order()
                  << ")\n";
        std::string labels_path = prefix + ".labels.json";
        geotrans::write_json_file(labels_to_json(c.action->labels), labels_path);
        std::cout << "wrote " << labels_path << "\n";
    }
    return 0;
}

json caps_to_json(const geotrans::Caps& caps) {
    json j;
    j["element_enumeration_cap"] = caps.element_enumeration_cap;
    j["aut_vertex_cap"] = caps.aut_vertex_cap;
    j["tuple_int_cap"] = caps.tuple_int_cap;
    return j;
}

json verdict_to_json(const geotrans::TypeVerdict& v) {
    json j;
    j["type"] = geotrans::to_string(v.type);
    j["primitive"] = v.primitive;
    j["quasiprimitive"] = v.quasiprimitive;
    j["minimal_normal_count"] = v.minimal_normal_count;
    j["socle_order"] = v.socle_order.get_str();
    j["socle_abelian"] = v.socle_abelian;
    j["socle_regular"] = v.socle_regular;
    if (v.socle_factor_count > 0) {
        j["socle_factor_count"] = v.socle_factor_count;
        j["socle_factor_order"] = v.socle_factor_order.get_str();
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json levels_to_json(const std::vector<geotrans::LevelVerdict>& levels) {
    json arr = json::array();
    for (const auto& lv : levels) {
        json j;
        j["level"] = lv.level;
        j["transitive"] = lv.transitive;
        j["tuple_count"] = lv.tuple_count;
        if (!lv.transitive) {
            j["witness_a"] = lv.witness_a;
            j["witness_b"] = lv.witness_b;
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

int cmd_report(const Options& opt) {
    geotrans::Caps caps = resolve_caps(opt);
    geotrans::Graph g = geotrans::read_graph_file(opt.graph_path);

    json report;
    report["schema"] = 1;
    {
        json prov;
        prov["tool"] = "geotrans";
        prov["version"] = kVersion;
        prov["graph_file"] = opt.graph_path;
        prov["group_file"] = opt.group_path.empty() ? json(nullptr) : json(opt.group_path);
        prov["max_s"] = opt.max_s;
        prov["classify"] = opt.classify;
        prov["caps"] = caps_to_json(caps);
        report["provenance"] = std::move(prov);
    }
    {
        json stats;
        stats["n"] = g.n();
        auto val = g.regular_valency();
        stats["valency"] = val ? json(*val) : json(nullptr);
        stats["girth"] = girth(g);
        stats["diameter"] = diameter(g);
        stats["components"] = static_cast<int>(geotrans::connected_components(g).size());
        auto fm = geotrans::f_membership(g);
        if (fm) {
            json f;
            f["m"] = fm->first;
            f["r"] = fm->second;
            stats["f_membership"] = std::move(f);
        } else {
            stats["f_membership"] = nullptr;
        }
        report["graph"] = std::move(stats);
    }

    // Anything from here on can hit a cap; emit what exists and exit 3.
    try {
        geotrans::PermGroup G = [&] {
            if (!opt.group_path.empty()) {
                auto gens = geotrans::read_generators_file(opt.group_path);
                for (const auto& p : gens)
                    if (p.degree() != g.n())
                        throw geotrans::InvalidInput(
                            "group degree does not match the graph");
                if (gens.empty()) return geotrans::PermGroup::trivial(g.n());
                return geotrans::PermGroup::from_generators(std::move(gens));
            }
            return geotrans::automorphism_group(g, caps);
        }();
        {
            json grp;
            grp["degree"] = G.degree();
            grp["order"] = G.order().get_str();
            grp["source"] = opt.group_path.empty() ? "automorphism-search" : "file";
            report["group"] = std::move(grp);
        }

        auto tr = geotrans::transitivity_report(g, G, opt.max_s, caps);
        {
            json t;
            t["vertex_transitive"] = tr.vertex_transitive;
            t["max_arc_level"] = tr.max_arc_level;
            t["max_geodesic_level"] = tr.max_geodesic_level;
            t["max_local_level"] = tr.max_local_level;
            t["arcs"] = levels_to_json(tr.arcs);
            t["geodesics"] = levels_to_json(tr.geodesics);
            t["local_arcs"] = levels_to_json(tr.local_arcs);
            report["transitivity"] = std::move(t);
        }

        auto fm = geotrans::f_membership(g);
        if (fm) {
            auto ig = geotrans::incidence_graph(g);
            json inc;
            inc["points"] = ig.structure.points;
            inc["lines"] = static_cast<int>(ig.structure.lines.size());
            inc["point_valency"] = ig.valencies.first;
            inc["line_valency"] = ig.valencies.second;
            inc["girth"] = girth(ig.graph);
            report["incidence"] = std::move(inc);
        }

        if (opt.classify) {
            json qp;
            if (!tr.vertex_transitive) {
                qp["vertices"] = nullptr;
                qp["note"] = "action is not vertex transitive; no type to assign";
            } else if (fm) {
                auto types = geotrans::check_clique_action_type(g, G, caps);
                qp["vertices"] = verdict_to_json(types.vertex);
                qp["cliques"] = verdict_to_json(types.clique);
                qp["socle_clique_orbits"] = types.socle_clique_orbits;
            } else {
                qp["vertices"] = verdict_to_json(geotrans::classify_action(G, caps));
            }
            report["quasiprimitive_type"] = std::move(qp);
        }
    } catch (const geotrans::CapExceeded& e) {
        report["cap_exceeded"] = e.what();
        std::cout << report.dump(2) << "\n";
        return 3;
    }

    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_verify(const Options& opt) {
    geotrans::Caps caps = resolve_caps(opt);
    std::vector<geotrans::CaseResult> results;
    if (opt.case_id.empty()) {
        results = geotrans::run_all_verify_cases(caps);
    } else {
        results.push_back(geotrans::run_verify_case(opt.case_id, caps));
    }

    int failed = 0;
    for (const auto& r : results) {
        std::cout << "case " << r.id << ": " << r.summary << "\n";
        for (const auto& c : r.checks) {
            std::cout << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.label
                      << ": expected " << c.expected << ", computed " << c.computed
                      << "\n";
        }
        std::cout << "  -> " << (r.passed ? "PASS" : "FAIL") << "\n";
        if (!r.passed) ++failed;
    }
    std::cout << "summary: " << (results.size() - failed) << "/" << results.size()
              << " cases passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"graph families, transitivity reports, and the verification suite"};
    app.require_subcommand(1);

    std::string case_help = "run a single case; known ids:";
    for (const auto& id : geotrans::verify_case_ids()) case_help += " " + id;

    CLI::App* construct = app.add_subcommand("construct", "build a graph family, write JSON files");
    construct->add_option("--family", opt.family,
                          "hamming, hamming-complement, kneser, two-coordinate, halfcube, "
                          "foldedcube, folded-halfcube, coset-psl2, pg-incidence, foster, "
                          "clique-graph-of, incidence-graph-of, double-cover-of, distance2-of")
        ->required();
    construct->add_option("--params", opt.params, "comma-separated integers")->delimiter(',');
    construct->add_option("--graph", opt.graph_path, "input graph for the *-of families");
    construct->add_option("-o,--output", opt.output, "output file prefix (default: family name)")
        ->each([&](const std::string&) { opt.output_given = true; });
    construct->add_option("--caps", opt.caps_text, "cap overrides, key=value comma list");

    CLI::App* report = app.add_subcommand("report", "property report for a graph (JSON to stdout)");
    report->add_option("--graph", opt.graph_path, "graph JSON file")->required();
    report->add_option("--group", opt.group_path,
                       "group JSON file; omitted means the automorphism group is computed");
    report->add_option("--max-s", opt.max_s, "transitivity levels to check")
        ->default_val(2)
        ->check(CLI::PositiveNumber);
    report->add_flag("--classify,!--no-classify", opt.classify,
                     "include quasiprimitive type classification (default on)");
    report->add_option("--caps", opt.caps_text, "cap overrides, key=value comma list");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--case", opt.case_id, case_help);
    verify->add_option("--caps", opt.caps_text, "cap overrides, key=value comma list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(opt);
        if (report->parsed()) return cmd_report(opt);
        return cmd_verify(opt);
    } catch (const geotrans::CapExceeded& e) {
        std::cerr << "error: cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
