#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "geotrans/autgrp.hpp"
#include "geotrans/construct.hpp"
#include "geotrans/errors.hpp"
#include "geotrans/graph.hpp"
#include "geotrans/symmetry.hpp"

using namespace geotrans;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::from_edges(10, e);
}

bool all_levels_true(const std::vector<LevelVerdict>& v) {
    return std::all_of(v.begin(), v.end(), [](const LevelVerdict& l) { return l.transitive; });
}

// true when some group element maps tuple a to tuple b, by sheer enumeration
bool joined_by_element(const PermGroup& g, const std::vector<int>& a, const std::vector<int>& b) {
    bool found = false;
    g.for_each_element([&](const Permutation& p) { found = found || apply_tuple(p, a) == b; });
    return found;
}

int common_neighbor_count(const Graph& g, int u, int w) {
    const auto &nu = g.neighbors(u), &nw = g.neighbors(w);
    std::vector<int> meet;
    std::set_intersection(nu.begin(), nu.end(), nw.begin(), nw.end(), std::back_inserter(meet));
    return static_cast<int>(meet.size());
}

}  // namespace

TEST_CASE("one_orbit separates rotation orbits on cycle arcs") {
    Graph c6 = cycle(6);
    PermGroup rot =
        PermGroup::from_generators({Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
    auto arcs = s_arcs(c6, 1);
    REQUIRE(arcs.size() == 12);

    auto verdict = one_orbit(rot, arcs, 1);
    CHECK(verdict.tuple_count == 12);
    CHECK_FALSE(verdict.transitive);
    REQUIRE(verdict.witness_a.size() == 2);
    REQUIRE(verdict.witness_b.size() == 2);
    CHECK_FALSE(joined_by_element(rot, verdict.witness_a, verdict.witness_b));

    // the full dihedral group closes the gap
    auto full = one_orbit(automorphism_group(c6), arcs, 1);
    CHECK(full.transitive);

    CHECK(one_orbit(rot, {}, 3).transitive);
}

TEST_CASE("one_orbit rejects groups that move tuples off the list") {
    Graph c5 = cycle(5);
    auto arcs = s_arcs(c5, 1);
    CHECK_THROWS_AS(one_orbit(sym(5), arcs, 1), ActionNotClosed);
}

TEST_CASE("cycles are arc and geodesic transitive at every length") {
    Graph c6 = cycle(6);
    PermGroup aut = automorphism_group(c6);
    CHECK(aut.order() == 12);

    auto arcs = check_s_arc_transitive(c6, aut, 3);
    REQUIRE(arcs.size() == 3);
    CHECK(all_levels_true(arcs));
    for (const auto& v : arcs) CHECK(v.tuple_count == 12);

    auto geo = check_s_geodesic_transitive(c6, aut, 3);
    CHECK(all_levels_true(geo));
    for (const auto& v : geo) CHECK(v.tuple_count == 12);

    auto rep = transitivity_report(c6, aut, 3);
    CHECK(rep.vertex_transitive);
    CHECK(rep.max_arc_level == 3);
    CHECK(rep.max_geodesic_level == 3);
    CHECK(rep.max_local_level == 3);
}

TEST_CASE("a path fails transitivity with witnesses in different orbits") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    PermGroup aut = automorphism_group(p3);
    CHECK(aut.order() == 2);

    auto rep = transitivity_report(p3, aut, 2);
    CHECK_FALSE(rep.vertex_transitive);
    CHECK(rep.max_arc_level == 0);
    CHECK(rep.max_geodesic_level == 0);
    REQUIRE_FALSE(rep.arcs[0].transitive);
    CHECK_FALSE(joined_by_element(aut, rep.arcs[0].witness_a, rep.arcs[0].witness_b));
}

TEST_CASE("kneser graph is 2-geodesic but not 2-arc transitive") {
    Graph kg = kneser(6, 2);
    PermGroup act = induced_set_action(sym(6), 2).group;

    auto arcs = check_s_arc_transitive(kg, act, 2);
    CHECK(arcs[0].transitive);
    CHECK(arcs[0].tuple_count == 90);
    REQUIRE_FALSE(arcs[1].transitive);
    CHECK(arcs[1].tuple_count == 450);

    // the two witness 2-arcs live in different orbits because their ends sit
    // at different distances
    const auto &wa = arcs[1].witness_a, &wb = arcs[1].witness_b;
    CHECK(kg.adjacent(wa[0], wa[2]) != kg.adjacent(wb[0], wb[2]));
    CHECK_FALSE(joined_by_element(act, wa, wb));

    auto geo = check_s_geodesic_transitive(kg, act, 2);
    CHECK(geo[0].transitive);
    CHECK(geo[1].transitive);
    CHECK(geo[1].tuple_count == 360);

    auto rep = transitivity_report(kg, act, 2);
    CHECK(rep.vertex_transitive);
    CHECK(rep.max_arc_level == 1);
    CHECK(rep.max_geodesic_level == 2);
}

TEST_CASE("petersen graph is 3-arc transitive") {
    Graph pet = petersen();
    PermGroup aut = automorphism_group(pet);
    CHECK(aut.order() == 120);

    auto rep = transitivity_report(pet, aut, 3);
    CHECK(rep.vertex_transitive);
    CHECK(rep.max_arc_level == 3);
    CHECK(rep.max_geodesic_level >= 2);
}

TEST_CASE("two-coordinate graph on three symbols fails 2-geodesic transitivity") {
    Graph t33 = two_coordinate_graph(3, 3);
    PermGroup w = wreath_product_action(sym(3), 3);

    auto geo = check_s_geodesic_transitive(t33, w, 2);
    CHECK(geo[0].transitive);
    REQUIRE_FALSE(geo[1].transitive);

    // the returned witnesses really are separated: their end pairs have
    // different numbers of common neighbours
    const auto &wa = geo[1].witness_a, &wb = geo[1].witness_b;
    CHECK(common_neighbor_count(t33, wa[0], wa[2]) != common_neighbor_count(t33, wb[0], wb[2]));

    // the same split pins down one concrete pair: both triples below are
    // 2-geodesics out of the all-zero word, yet no element joins them
    std::vector<int> a{0, 4, 2}, b{0, 5, 13};
    auto ok_geodesic = [&](const std::vector<int>& t) {
        return t33.adjacent(t[0], t[1]) && t33.adjacent(t[1], t[2]) &&
               !t33.adjacent(t[0], t[2]) && distances_from(t33, t[0])[t[2]] == 2;
    };
    CHECK(ok_geodesic(a));
    CHECK(ok_geodesic(b));
    CHECK(common_neighbor_count(t33, 0, 2) != common_neighbor_count(t33, 0, 13));
    CHECK_FALSE(joined_by_element(w, a, b));

    // consistency: the graph is not locally a clique union, so the
    // equivalence machinery declines it
    auto eq = check_geodesic_incidence_equivalence(t33, w);
    CHECK_FALSE(eq.applicable);
    CHECK(eq.consistent);
}

TEST_CASE("incidence graph of the kneser graph is locally 3-arc transitive") {
    Graph kg = kneser(6, 2);
    PermGroup act = induced_set_action(sym(6), 2).group;
    auto inc = incidence_graph(kg);
    PermGroup inc_act = incidence_action(act, inc.structure.lines);

    CHECK(inc_act.degree() == 30);
    CHECK(inc_act.order() == act.order());
    CHECK(action_preserves_graph(inc.graph, {inc_act, [&] {
                                                 std::vector<int> l(30);
                                                 for (int i = 0; i < 30; ++i) l[i] = i;
                                                 return l;
                                             }()}));

    auto local = check_locally_s_arc_transitive(inc.graph, inc_act, 3);
    CHECK(all_levels_true(local));

    std::vector<int> points(15), lines(15);
    for (int i = 0; i < 15; ++i) {
        points[i] = i;
        lines[i] = 15 + i;
    }
    auto rooted4 = check_rooted_s_arc_transitive(inc.graph, inc_act, points, 4);
    CHECK(all_levels_true(rooted4));
    auto line1 = check_rooted_s_arc_transitive(inc.graph, inc_act, lines, 1);
    CHECK(all_levels_true(line1));

    // two orbits on vertices: points and lines
    CHECK_FALSE(inc_act.is_transitive());
    CHECK(inc_act.orbits().size() == 2);
}

TEST_CASE("geodesic and incidence transitivity agree on the kneser graph") {
    Graph kg = kneser(6, 2);
    PermGroup act = induced_set_action(sym(6), 2).group;

    auto eq = check_geodesic_incidence_equivalence(kg, act);
    CHECK(eq.applicable);
    CHECK(eq.m == 3);
    CHECK(eq.r == 2);
    CHECK(eq.geodesic2);
    CHECK(eq.point4);
    CHECK(eq.local3);
    CHECK(eq.line1);
    CHECK(eq.point4_local3);
    CHECK(eq.point4_line1);
    CHECK(eq.consistent);
}

TEST_CASE("the equivalence also holds for groups that fail the conditions") {
    Graph kg = kneser(6, 2);
    PermGroup act = induced_set_action(sym(6), 2).group;

    // a point stabilizer is not vertex transitive, so every clause must
    // come out false together
    PermGroup stab = act.point_stabilizer(0);
    auto eq = check_geodesic_incidence_equivalence(kg, stab);
    CHECK(eq.applicable);
    CHECK_FALSE(eq.geodesic2);
    CHECK_FALSE(eq.point4_local3);
    CHECK_FALSE(eq.point4_line1);
    CHECK(eq.consistent);
}

TEST_CASE("hamming graph equivalence report") {
    Graph h35 = hamming(3, 5);
    PermGroup w = wreath_product_action(sym(5), 3);

    auto eq = check_geodesic_incidence_equivalence(h35, w);
    CHECK(eq.applicable);
    CHECK(eq.m == 3);
    CHECK(eq.r == 4);
    CHECK(eq.geodesic2);
    CHECK(eq.point4_local3);
    CHECK(eq.point4_line1);
    CHECK(eq.consistent);
}

TEST_CASE("complete multipartite complement is out of scope for the equivalence") {
    Graph g = complement(hamming(2, 5));
    PermGroup aut = automorphism_group(g);
    auto eq = check_geodesic_incidence_equivalence(g, aut);
    CHECK_FALSE(eq.applicable);
    CHECK(eq.consistent);
}

TEST_CASE("sextic coset graph equivalence report") {
    auto seed = find_psl2_s4_seed(23);
    auto res = coset_graph(psl2(23), seed.subgroup_gens, seed.g);

    auto geo = check_s_geodesic_transitive(res.graph, res.action.group, 2);
    CHECK(all_levels_true(geo));
    auto arcs = check_s_arc_transitive(res.graph, res.action.group, 2);
    CHECK(arcs[0].transitive);
    CHECK_FALSE(arcs[1].transitive);

    auto eq = check_geodesic_incidence_equivalence(res.graph, res.action.group);
    CHECK(eq.applicable);
    CHECK(eq.m == 3);
    CHECK(eq.r == 2);
    CHECK(eq.geodesic2);
    CHECK(eq.point4_local3);
    CHECK(eq.point4_line1);
    CHECK(eq.consistent);
}

TEST_CASE("foster graph is 5-arc transitive") {
    Graph f = foster_graph();
    PermGroup aut = automorphism_group(f);
    CHECK(aut.order() == 4320);

    auto rep = transitivity_report(f, aut, 5);
    CHECK(rep.vertex_transitive);
    CHECK(rep.max_arc_level == 5);
    CHECK(rep.max_geodesic_level == 5);
    // sharply so: as many 5-arcs as automorphisms
    CHECK(rep.arcs[4].tuple_count == 4320);
}

TEST_CASE("degree mismatches are rejected") {
    Graph c6 = cycle(6);
    CHECK_THROWS_AS(check_s_arc_transitive(c6, sym(5), 1), InvalidInput);
    CHECK_THROWS_AS(transitivity_report(c6, sym(7), 2), InvalidInput);
}
