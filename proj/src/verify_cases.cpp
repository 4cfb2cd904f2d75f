#include "geotrans/verify_cases.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "geotrans/autgrp.hpp"
#include "geotrans/construct.hpp"
#include "geotrans/errors.hpp"
#include "geotrans/graph.hpp"
#include "geotrans/onanscott.hpp"
#include "geotrans/symmetry.hpp"

namespace geotrans {

namespace {

// Collects the expected-vs-computed lines of one case. A check passes when
// the two strings agree exactly; add_ok is for conditions whose expectation
// is a predicate rather than a literal value.
struct Recorder {
    CaseResult out;

    Recorder(std::string id, std::string summary) {
        out.id = std::move(id);
        out.summary = std::move(summary);
        out.passed = true;
    }

    void add(const std::string& label, std::string expected, std::string computed) {
        CaseCheck c;
        c.label = label;
        c.passed = expected == computed;
        c.expected = std::move(expected);
        c.computed = std::move(computed);
        out.passed = out.passed && c.passed;
        out.checks.push_back(std::move(c));
    }

    void add_ok(const std::string& label, std::string expected, std::string computed, bool ok) {
        CaseCheck c;
        c.label = label;
        c.expected = std::move(expected);
        c.computed = std::move(computed);
        c.passed = ok;
        out.passed = out.passed && ok;
        out.checks.push_back(std::move(c));
    }

    void eq(const std::string& label, long long expected, long long computed) {
        add(label, std::to_string(expected), std::to_string(computed));
    }
    void eq(const std::string& label, const mpz_class& expected, const mpz_class& computed) {
        add(label, expected.get_str(), computed.get_str());
    }
    void eq(const std::string& label, const std::string& expected, const std::string& computed) {
        add(label, expected, computed);
    }
    void yes(const std::string& label, bool computed) {
        add(label, "true", computed ? "true" : "false");
    }
    void no(const std::string& label, bool computed) {
        add(label, "false", computed ? "true" : "false");
    }
    void at_least(const std::string& label, long long bound, long long computed) {
        add_ok(label, ">= " + std::to_string(bound), std::to_string(computed), computed >= bound);
    }
};

std::string fm_string(const std::optional<std::pair<int, int>>& fm) {
    if (!fm) return "none";
    return "(" + std::to_string(fm->first) + "," + std::to_string(fm->second) + ")";
}

std::string pair_string(const std::pair<int, int>& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string tuple_string(const std::vector<int>& t) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << t[i];
    os << "]";
    return os.str();
}

bool levels_true_up_to(const std::vector<LevelVerdict>& v, int s) {
    for (const auto& lv : v)
        if (lv.level <= s && !lv.transitive) return false;
    return static_cast<int>(v.size()) >= s;
}

const LevelVerdict& level_at(const std::vector<LevelVerdict>& v, int s) {
    for (const auto& lv : v)
        if (lv.level == s) return lv;
    throw NotFound("no verdict recorded at level " + std::to_string(s));
}

bool is_two_geodesic(const Graph& g, const std::vector<int>& t) {
    return t.size() == 3 && g.adjacent(t[0], t[1]) && g.adjacent(t[1], t[2]) &&
           !g.adjacent(t[0], t[2]) && t[0] != t[2];
}

Graph heawood_lcf() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
    return Graph::from_edges(14, edges);
}

// ---- brute-force oracles for the property suite --------------------------

mpz_class closure_order(const std::vector<Permutation>& gens, int degree) {
    std::set<Permutation> seen;
    seen.insert(Permutation::identity(degree));
    std::vector<Permutation> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                Permutation q = compose(p, g);
                if (seen.insert(q).second) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return mpz_class(static_cast<unsigned long>(seen.size()));
}

long long brute_force_aut_count(const Graph& g) {
    std::vector<int> img(g.n());
    for (int i = 0; i < g.n(); ++i) img[i] = i;
    long long count = 0;
    do {
        if (is_automorphism(g, Permutation(img))) ++count;
    } while (std::next_permutation(img.begin(), img.end()));
    return count;
}

std::vector<std::vector<int>> subset_maximal_cliques(const Graph& g) {
    const int n = g.n();
    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u] |= std::uint32_t{1} << v;

    std::vector<std::vector<int>> found;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        bool clique = true;
        for (std::uint32_t rest = mask; rest && clique;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            clique = (mask & ~(std::uint32_t{1} << v) & ~adj[v]) == 0;
        }
        if (!clique) continue;
        bool maximal = true;
        for (int u = 0; u < n && maximal; ++u)
            if (!(mask >> u & 1) && (adj[u] & mask) == mask) maximal = false;
        if (!maximal) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) verts.push_back(v);
        found.push_back(std::move(verts));
    }
    std::sort(found.begin(), found.end());
    return found;
}

// ---- the registered cases -------------------------------------------------

CaseResult case_kneser62(const Caps& caps) {
    Recorder rec("kneser62",
                 "Kneser graph KG(6,2): invariants, 2-geodesic but not 2-arc "
                 "transitive, type pair (AS, AS)");
    Graph g = kneser(6, 2);
    auto action = induced_set_action(sym(6), 2, caps);

    rec.eq("vertex count", 15, g.n());
    auto val = g.regular_valency();
    rec.eq("valency", 6, val ? *val : -1);
    rec.eq("girth", 3, girth(g));
    rec.eq("local shape (m,r)", "(3,2)", fm_string(f_membership(g)));

    auto geo = check_s_geodesic_transitive(g, action.group, 2, caps);
    rec.yes("2-geodesic transitive under Sym(6)", levels_true_up_to(geo, 2));
    auto arcs = check_s_arc_transitive(g, action.group, 2, caps);
    rec.yes("arc transitive", level_at(arcs, 1).transitive);
    rec.no("2-arc transitive", level_at(arcs, 2).transitive);

    rec.eq("|Aut|", mpz_class(720), automorphism_group(g, caps).order());

    auto types = check_clique_action_type(g, action.group, caps);
    rec.eq("vertex type", "AS", to_string(types.vertex.type));
    rec.eq("clique type", "AS", to_string(types.clique.type));
    return rec.out;
}

CaseResult case_hamming35(const Caps& caps) {
    Recorder rec("hamming35",
                 "H(3,5) under Sym(5) wr Sym(3): 2-geodesic transitive, vertex "
                 "type PA, clique action not quasiprimitive");
    Graph g = hamming(3, 5, caps);
    PermGroup w = wreath_product_action(sym(5), 3, caps);

    rec.eq("vertex count", 125, g.n());
    rec.eq("local shape (m,r)", "(3,4)", fm_string(f_membership(g)));
    auto geo = check_s_geodesic_transitive(g, w, 2, caps);
    rec.yes("2-geodesic transitive", levels_true_up_to(geo, 2));

    auto types = check_clique_action_type(g, w, caps);
    rec.eq("vertex type", "PA", to_string(types.vertex.type));
    rec.eq("clique type", "NotQuasiprimitive", to_string(types.clique.type));
    rec.eq("socle orbits on cliques", 3, types.socle_clique_orbits);
    return rec.out;
}

CaseResult case_hamming_affine(const Caps& caps) {
    Recorder rec("hamming-affine",
                 "H(2,3) and H(2,4) under their full automorphism groups: "
                 "vertex type HA, clique action not quasiprimitive");
    for (int n : {3, 4}) {
        std::string tag = "H(2," + std::to_string(n) + ") ";
        Graph g = hamming(2, n, caps);
        PermGroup aut = automorphism_group(g, caps);
        auto types = check_clique_action_type(g, aut, caps);
        rec.eq(tag + "vertex type", "HA", to_string(types.vertex.type));
        rec.eq(tag + "clique type", "NotQuasiprimitive", to_string(types.clique.type));
        rec.eq(tag + "socle order = vertex count", mpz_class(n * n),
               types.vertex.socle_order);
        rec.yes(tag + "socle elementary abelian", types.vertex.socle_abelian);
    }
    return rec.out;
}

CaseResult case_complement_h25(const Caps& caps) {
    Recorder rec("complement-h25",
                 "complement of H(2,5): diameter 2 and 2-geodesic transitive");
    Graph g = complement(hamming(2, 5, caps));
    rec.eq("vertex count", 25, g.n());
    rec.eq("diameter", 2, diameter(g));
    PermGroup aut = automorphism_group(g, caps);
    rec.eq("|Aut|", mpz_class(28800), aut.order());
    auto geo = check_s_geodesic_transitive(g, aut, 2, caps);
    rec.yes("2-geodesic transitive", levels_true_up_to(geo, 2));
    return rec.out;
}

CaseResult case_two_coordinate(const Caps& caps) {
    Recorder rec("two-coordinate",
                 "graphs on words adjacent in exactly two coordinates: "
                 "degenerate smalls, failed 2-geodesic transitivity with "
                 "witnesses, and the k=2 complement isomorphism");
    Graph t22 = two_coordinate_graph(2, 2, caps);
    rec.no("(k=2,m=2) connected", is_connected(t22));

    Graph t32 = two_coordinate_graph(3, 2, caps);
    auto comps = connected_components(t32);
    bool all4 = !comps.empty();
    for (const auto& c : comps) all4 = all4 && c.size() == 4;
    rec.eq("(k=3,m=2) component count", 2, static_cast<long long>(comps.size()));
    rec.yes("(k=3,m=2) components all of size 4", all4);

    for (auto [k, m] : {std::pair<int, int>{3, 3}, {4, 3}}) {
        std::string tag = "(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ") ";
        Graph t = two_coordinate_graph(k, m, caps);
        PermGroup aut = automorphism_group(t, caps);
        auto geo = check_s_geodesic_transitive(t, aut, 2, caps);
        const auto& lv = level_at(geo, 2);
        rec.no(tag + "2-geodesic transitive under Aut", lv.transitive);
        bool genuine = is_two_geodesic(t, lv.witness_a) && is_two_geodesic(t, lv.witness_b);
        rec.add_ok(tag + "witness pair", "two unjoined 2-geodesics",
                   tuple_string(lv.witness_a) + " / " + tuple_string(lv.witness_b), genuine);
    }

    for (int m : {3, 4, 5}) {
        std::string tag = "(k=2,m=" + std::to_string(m) + ") ";
        rec.yes(tag + "isomorphic to complement of H(2," + std::to_string(m) + ")",
                is_isomorphic(two_coordinate_graph(2, m, caps),
                              complement(hamming(2, m, caps)), caps));
    }
    return rec.out;
}

CaseResult case_psl2_coset(const Caps& caps) {
    Recorder rec("psl2-coset",
                 "sextic coset graph on PSL(2,23) over a Sym(4) subgroup: "
                 "invariants, 2-geodesic transitivity, AS on vertices and cliques");
    PermGroup g23 = psl2(23);
    auto seed = find_psl2_s4_seed(23, caps);
    PermGroup h = PermGroup::from_generators(seed.subgroup_gens);
    rec.eq("seed subgroup order", mpz_class(24), h.order());
    rec.eq("order of h", 4, static_cast<long long>(seed.h.order()));
    rec.eq("order of g", 3, static_cast<long long>(seed.g.order()));
    rec.yes("g centralizes h", commute(seed.g, seed.h));

    auto res = coset_graph(g23, seed.subgroup_gens, seed.g, caps);
    rec.eq("vertex count", 253, res.graph.n());
    rec.eq("valency", 6, res.valency);
    rec.eq("girth", 3, girth(res.graph));
    rec.eq("local shape (m,r)", "(3,2)", fm_string(f_membership(res.graph)));

    auto geo = check_s_geodesic_transitive(res.graph, res.action.group, 2, caps);
    rec.yes("2-geodesic transitive", levels_true_up_to(geo, 2));

    auto types = check_clique_action_type(res.graph, res.action.group, caps);
    rec.eq("vertex type", "AS", to_string(types.vertex.type));
    rec.eq("clique type", "AS", to_string(types.clique.type));
    return rec.out;
}

CaseResult case_incidence_equivalence(const Caps& caps) {
    Recorder rec("incidence-equivalence",
                 "the three equivalent transitivity conditions agree on each "
                 "test graph (vacuously on the inapplicable one)");

    auto check = [&](const std::string& tag, const Graph& g, const PermGroup& G,
                     bool applicable) {
        auto er = check_geodesic_incidence_equivalence(g, G, caps);
        rec.eq(tag + " applicable", applicable ? "true" : "false",
               er.applicable ? "true" : "false");
        if (er.applicable) {
            bool agree = er.geodesic2 == er.point4_local3 && er.geodesic2 == er.point4_line1;
            rec.add_ok(tag + " clauses", "all three agree",
                       std::string(er.geodesic2 ? "true" : "false") + "/" +
                           (er.point4_local3 ? "true" : "false") + "/" +
                           (er.point4_line1 ? "true" : "false"),
                       agree && er.consistent);
        } else {
            rec.yes(tag + " vacuously consistent", er.consistent);
        }
    };

    check("KG(6,2)", kneser(6, 2), induced_set_action(sym(6), 2, caps).group, true);
    check("H(3,5)", hamming(3, 5, caps), wreath_product_action(sym(5), 3, caps), true);
    {
        Graph c = complement(hamming(2, 5, caps));
        check("complement H(2,5)", c, automorphism_group(c, caps), false);
    }
    {
        auto seed = find_psl2_s4_seed(23, caps);
        auto res = coset_graph(psl2(23), seed.subgroup_gens, seed.g, caps);
        check("PSL(2,23) coset graph", res.graph, res.action.group, true);
    }
    return rec.out;
}

CaseResult case_incidence_structure(const Caps& caps) {
    Recorder rec("incidence-structure",
                 "each locally-mK_r instance: biregular point-clique incidence "
                 "graph of girth >= 8, clique graph back in the family, double "
                 "clique graph isomorphic to the original");

    auto check = [&](const std::string& tag, const Graph& g) {
        auto fm = f_membership(g);
        rec.add_ok(tag + " in family", "locally mK_r", fm_string(fm), fm.has_value());
        if (!fm) return;
        int m = fm->first;
        int r = fm->second;

        auto ig = incidence_graph(g);
        rec.eq(tag + " incidence valencies", pair_string({m, r + 1}),
               pair_string(ig.valencies));
        rec.at_least(tag + " incidence girth", 8, girth(ig.graph));

        auto cg = clique_graph(g);
        rec.eq(tag + " clique graph shape", pair_string({r + 1, m - 1}),
               fm_string(f_membership(cg.graph)));
        rec.yes(tag + " double clique graph isomorphic to original",
                is_isomorphic(clique_graph(cg.graph).graph, g, caps));
    };

    check("KG(6,2)", kneser(6, 2));
    check("H(3,5)", hamming(3, 5, caps));
    check("H(2,3)", hamming(2, 3, caps));
    check("H(2,4)", hamming(2, 4, caps));
    {
        auto seed = find_psl2_s4_seed(23, caps);
        check("PSL(2,23) coset graph",
              coset_graph(psl2(23), seed.subgroup_gens, seed.g, caps).graph);
    }
    return rec.out;
}

CaseResult case_foster(const Caps& caps) {
    Recorder rec("foster",
                 "Foster graph chain: asset invariants, 5-arc transitivity, and "
                 "the 2-geodesic transitive distance-2 half");
    Graph g = foster_graph();
    rec.eq("vertex count", 90, g.n());
    auto val = g.regular_valency();
    rec.eq("valency", 3, val ? *val : -1);
    rec.eq("girth", 8, girth(g));
    rec.eq("diameter", 8, diameter(g));

    PermGroup aut = automorphism_group(g, caps);
    rec.eq("|Aut|", mpz_class(4320), aut.order());
    auto arcs = check_s_arc_transitive(g, aut, 5, caps);
    rec.yes("5-arc transitive", levels_true_up_to(arcs, 5));

    Graph half = distance2_graph(g, 0);
    rec.eq("distance-2 half: vertex count", 45, half.n());
    rec.eq("distance-2 half: local shape (m,r)", "(3,2)", fm_string(f_membership(half)));
    PermGroup auth = automorphism_group(half, caps);
    auto geo = check_s_geodesic_transitive(half, auth, 2, caps);
    rec.yes("distance-2 half: 2-geodesic transitive", levels_true_up_to(geo, 2));
    return rec.out;
}

CaseResult case_heawood(const Caps& caps) {
    Recorder rec("heawood",
                 "PG(2,2) incidence graph: Heawood, locally 4-arc transitive; "
                 "its line graph is locally 2K_2 and 2-geodesic transitive");
    auto pg = pg_incidence(2);
    rec.eq("vertex count", 14, pg.graph.n());
    rec.yes("isomorphic to the Heawood graph",
            is_isomorphic(pg.graph, heawood_lcf(), caps));

    auto local = check_locally_s_arc_transitive(pg.graph, pg.action.group, 4, caps);
    rec.yes("locally 4-arc transitive under PSL(3,2)", levels_true_up_to(local, 4));

    auto lg = clique_graph(pg.graph);
    rec.eq("line graph: vertex count", 21, lg.graph.n());
    rec.eq("line graph: local shape (m,r)", "(2,2)", fm_string(f_membership(lg.graph)));

    PermGroup aut = automorphism_group(pg.graph, caps);
    rec.eq("|Aut|", mpz_class(336), aut.order());
    PermGroup on_lines = clique_action(aut, lg.cliques);
    auto geo = check_s_geodesic_transitive(lg.graph, on_lines, 2, caps);
    rec.yes("line graph: 2-geodesic transitive under the induced action",
            levels_true_up_to(geo, 2));
    return rec.out;
}

CaseResult case_properties(const Caps& caps) {
    Recorder rec("properties",
                 "cross-cutting property suite: orbit-stabilizer identity, "
                 "brute-force closures, automorphism and clique oracles, and "
                 "the quasiprimitive type constraint");

    std::vector<std::pair<std::string, PermGroup>> groups;
    groups.emplace_back("Sym(6) on pairs", induced_set_action(sym(6), 2, caps).group);
    groups.emplace_back("PSL(2,23)", psl2(23));
    groups.emplace_back("Sym(5) wr Sym(3)", wreath_product_action(sym(5), 3, caps));
    groups.emplace_back("Aut H(2,3)", automorphism_group(hamming(2, 3, caps), caps));
    groups.emplace_back("Aut H(2,4)", automorphism_group(hamming(2, 4, caps), caps));

    auto pg = pg_incidence(2);
    groups.emplace_back("PSL(3,2) on PG(2,2)", pg.action.group);
    groups.emplace_back("Aut Heawood", automorphism_group(pg.graph, caps));

    Graph ch25 = complement(hamming(2, 5, caps));
    groups.emplace_back("Aut complement H(2,5)", automorphism_group(ch25, caps));

    Graph half = distance2_graph(foster_graph(), 0);
    groups.emplace_back("Aut Foster half", automorphism_group(half, caps));

    auto seed = find_psl2_s4_seed(23, caps);
    auto coset = coset_graph(psl2(23), seed.subgroup_gens, seed.g, caps);
    groups.emplace_back("PSL(2,23) on cosets", coset.action.group);

    {
        std::string bad;
        for (const auto& [name, G] : groups) {
            mpz_class lhs = mpz_class(static_cast<unsigned long>(G.orbit(0).size())) *
                            G.point_stabilizer(0).order();
            if (lhs != G.order() && bad.empty()) bad = name;
        }
        rec.add_ok("orbit-stabilizer identity",
                   "|orbit(0)| * |stabilizer(0)| = |G| on " +
                       std::to_string(groups.size()) + " groups",
                   bad.empty() ? "holds on all" : "fails on " + bad, bad.empty());
    }

    {
        int tested = 0;
        std::string bad;
        for (const auto& [name, G] : groups) {
            if (G.order() > 5000) continue;
            ++tested;
            if (closure_order(G.generators(), G.degree()) != G.order() && bad.empty())
                bad = name;
        }
        for (const auto& [name, G] :
             std::vector<std::pair<std::string, PermGroup>>{{"Sym(4)", sym(4)},
                                                            {"Alt(5)", alt(5)},
                                                            {"PSL(2,7)", psl2(7)}}) {
            ++tested;
            if (closure_order(G.generators(), G.degree()) != G.order() && bad.empty())
                bad = name;
        }
        rec.add_ok("generator closure matches stabilizer-chain order",
                   "agreement on every group of order <= 5000",
                   bad.empty() ? "agrees on " + std::to_string(tested) + " groups"
                               : "fails on " + bad,
                   bad.empty());
    }

    {
        std::vector<std::pair<std::string, Graph>> smalls;
        smalls.emplace_back("P4", Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
        smalls.emplace_back("C5", Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
        smalls.emplace_back("C6", Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
        smalls.emplace_back("K4", complement(Graph(4)));
        smalls.emplace_back("K3,3", complement(hamming(2, 3, caps)));
        smalls.emplace_back("Q3", hamming(3, 2, caps));
        smalls.emplace_back("K4,4", foldedcube(4));
        smalls.emplace_back("2K2", two_coordinate_graph(2, 2, caps));
        std::string bad;
        for (const auto& [name, g] : smalls)
            if (automorphism_group(g, caps).order() !=
                    static_cast<long>(brute_force_aut_count(g)) &&
                bad.empty())
                bad = name;
        rec.add_ok("automorphism search vs exhaustive permutation scan",
                   "agreement on " + std::to_string(smalls.size()) + " graphs with n <= 8",
                   bad.empty() ? "agrees on all" : "fails on " + bad, bad.empty());
    }

    {
        std::vector<std::pair<std::string, Graph>> mediums;
        mediums.emplace_back("C6", Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
        mediums.emplace_back("K5", complement(Graph(5)));
        mediums.emplace_back("Petersen", kneser(5, 2));
        mediums.emplace_back("Heawood", heawood_lcf());
        mediums.emplace_back("KG(6,2)", kneser(6, 2));
        mediums.emplace_back("H(2,3)", hamming(2, 3, caps));
        mediums.emplace_back("H(2,4)", hamming(2, 4, caps));
        mediums.emplace_back("halved Q4", halfcube(4));
        mediums.emplace_back("Desargues", standard_double_cover(kneser(5, 2)));
        std::string bad;
        for (const auto& [name, g] : mediums)
            if (maximal_cliques(g) != subset_maximal_cliques(g) && bad.empty()) bad = name;
        rec.add_ok("maximal clique enumeration vs subset scan",
                   "agreement on " + std::to_string(mediums.size()) + " graphs with n <= 20",
                   bad.empty() ? "agrees on all" : "fails on " + bad, bad.empty());
    }

    {
        struct Instance {
            std::string name;
            Graph graph;
            PermGroup action;
            std::string expected_type;
        };
        auto lg = clique_graph(pg.graph);
        std::vector<Instance> instances;
        instances.push_back({"KG(6,2)", kneser(6, 2), induced_set_action(sym(6), 2, caps).group, "AS"});
        instances.push_back({"H(3,5)", hamming(3, 5, caps), wreath_product_action(sym(5), 3, caps), "PA"});
        instances.push_back({"H(2,3)", hamming(2, 3, caps), automorphism_group(hamming(2, 3, caps), caps), "HA"});
        instances.push_back({"H(2,4)", hamming(2, 4, caps), automorphism_group(hamming(2, 4, caps), caps), "HA"});
        instances.push_back({"PSL(2,23) coset graph", coset.graph, coset.action.group, "AS"});
        instances.push_back({"Heawood line graph", lg.graph,
                             clique_action(automorphism_group(pg.graph, caps), lg.cliques), "AS"});
        instances.push_back({"Foster half", half, automorphism_group(half, caps), "NotQuasiprimitive"});

        bool constraint = true;
        bool prim_implies_qp = true;
        for (const auto& inst : instances) {
            auto fm = f_membership(inst.graph);
            auto geo = check_s_geodesic_transitive(inst.graph, inst.action, 2, caps);
            rec.add_ok(inst.name + ": 2-geodesic transitive member of the family",
                       "locally mK_r and 2-geodesic transitive",
                       fm_string(fm) + ", " + (levels_true_up_to(geo, 2) ? "true" : "false"),
                       fm.has_value() && levels_true_up_to(geo, 2));
            auto verdict = classify_action(inst.action, caps);
            rec.eq(inst.name + ": vertex type", inst.expected_type,
                   to_string(verdict.type));
            if (verdict.quasiprimitive) {
                bool in_set = verdict.type == QPType::HA || verdict.type == QPType::PA ||
                              verdict.type == QPType::AS || verdict.type == QPType::TW ||
                              verdict.type == QPType::SD;
                constraint = constraint && in_set;
            }
            if (verdict.primitive && !verdict.quasiprimitive) prim_implies_qp = false;
        }
        rec.yes("every quasiprimitive verdict lies in {HA, PA, AS, TW, SD}", constraint);
        rec.yes("primitive verdicts are always quasiprimitive", prim_implies_qp);
    }
    return rec.out;
}

struct CaseEntry {
    const char* id;
    const char* summary;
    CaseResult (*run)(const Caps&);
};

constexpr CaseEntry kCases[] = {
    {"kneser62",
     "Kneser graph KG(6,2): invariants, 2-geodesic but not 2-arc transitive, "
     "type pair (AS, AS)",
     case_kneser62},
    {"hamming35",
     "H(3,5) under Sym(5) wr Sym(3): 2-geodesic transitive, vertex type PA, "
     "clique action not quasiprimitive",
     case_hamming35},
    {"hamming-affine",
     "H(2,3) and H(2,4) under their full automorphism groups: vertex type HA, "
     "clique action not quasiprimitive",
     case_hamming_affine},
    {"complement-h25", "complement of H(2,5): diameter 2 and 2-geodesic transitive",
     case_complement_h25},
    {"two-coordinate",
     "graphs on words adjacent in exactly two coordinates: degenerate smalls, "
     "failed 2-geodesic transitivity with witnesses, and the k=2 complement "
     "isomorphism",
     case_two_coordinate},
    {"psl2-coset",
     "sextic coset graph on PSL(2,23) over a Sym(4) subgroup: invariants, "
     "2-geodesic transitivity, AS on vertices and cliques",
     case_psl2_coset},
    {"incidence-equivalence",
     "the three equivalent transitivity conditions agree on each test graph "
     "(vacuously on the inapplicable one)",
     case_incidence_equivalence},
    {"incidence-structure",
     "each locally-mK_r instance: biregular point-clique incidence graph of "
     "girth >= 8, clique graph back in the family, double clique graph "
     "isomorphic to the original",
     case_incidence_structure},
    {"foster",
     "Foster graph chain: asset invariants, 5-arc transitivity, and the "
     "2-geodesic transitive distance-2 half",
     case_foster},
    {"heawood",
     "PG(2,2) incidence graph: Heawood, locally 4-arc transitive; its line "
     "graph is locally 2K_2 and 2-geodesic transitive",
     case_heawood},
    {"properties",
     "cross-cutting property suite: orbit-stabilizer identity, brute-force "
     "closures, automorphism and clique oracles, and the quasiprimitive type "
     "constraint",
     case_properties},
};

}  // namespace

const std::vector<std::string>& verify_case_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& e : kCases) v.emplace_back(e.id);
        return v;
    }();
    return ids;
}

std::string verify_case_summary(const std::string& id) {
    for (const auto& e : kCases)
        if (id == e.id) return e.summary;
    throw NotFound("unknown verification case: " + id);
}

CaseResult run_verify_case(const std::string& id, const Caps& caps) {
    for (const auto& e : kCases)
        if (id == e.id) return e.run(caps);
    throw NotFound("unknown verification case: " + id);
}

std::vector<CaseResult> run_all_verify_cases(const Caps& caps) {
    std::vector<CaseResult> out;
    for (const auto& e : kCases) out.push_back(e.run(caps));
    return out;
}

}  // namespace geotrans
