#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "geotrans/errors.hpp"
#include "geotrans/graph.hpp"
#include "oracles.hpp"

using geotrans::CapExceeded;
using geotrans::Graph;
using geotrans::InvalidInput;
using geotrans::kUnreachable;
using geotrans::LocalShape;
using geotrans::Permutation;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle(int n) {
    auto e = path(n).edges();
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, e);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

// vertices are the k-subsets of {0..n-1} in lexicographic order, adjacent
// when disjoint
Graph kneser(int n, int k) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    gen(gen, 0);
    std::vector<std::pair<int, int>> e;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b) {
            std::vector<int> inter;
            std::set_intersection(subsets[a].begin(), subsets[a].end(), subsets[b].begin(),
                                  subsets[b].end(), std::back_inserter(inter));
            if (inter.empty()) e.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return Graph::from_edges(static_cast<int>(subsets.size()), e);
}

// rook's graph: positions x + n*y, adjacent when they share a row or column
Graph rook(int n) {
    std::vector<std::pair<int, int>> e;
    auto id = [n](int x, int y) { return x + n * y; };
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            for (int x2 = x + 1; x2 < n; ++x2) e.emplace_back(id(x, y), id(x2, y));
            for (int y2 = y + 1; y2 < n; ++y2) e.emplace_back(id(x, y), id(x, y2));
        }
    return Graph::from_edges(n * n, e);
}

Graph cube3() {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) e.emplace_back(v, v ^ (1 << b));
    return Graph::from_edges(8, e);
}

Graph k33() {
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
    return Graph::from_edges(6, e);
}

long long handshake(const Graph& g) {
    long long sum = 0;
    for (int u = 0; u < g.n(); ++u) sum += g.valency(u);
    return sum;
}

}  // namespace

TEST_CASE("construction and adjacency") {
    auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 2}, {2, 0}});
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);  // the duplicate collapses
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(!g.adjacent(0, 3));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.valency(3) == 0);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InvalidInput);
    CHECK_THROWS_AS(g.neighbors(4), InvalidInput);
}

TEST_CASE("handshake across assorted graphs") {
    for (const Graph& g : {path(6), cycle(7), complete(5), kneser(5, 2), rook(4), cube3()})
        CHECK(handshake(g) == 2 * g.edge_count());
}

TEST_CASE("distances and connectivity") {
    auto p = path(4);
    CHECK(geotrans::distances_from(p, 0) == std::vector<int>{0, 1, 2, 3});
    CHECK(geotrans::is_connected(p));

    auto two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto d = geotrans::distances_from(two, 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == kUnreachable);
    CHECK(!geotrans::is_connected(two));
    auto comps = geotrans::connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3});
}

TEST_CASE("diameter and girth on standards") {
    CHECK(geotrans::diameter(complete(4)) == 1);
    CHECK(geotrans::girth(complete(4)) == 3);
    CHECK(geotrans::diameter(cycle(5)) == 2);
    CHECK(geotrans::girth(cycle(5)) == 5);
    CHECK(geotrans::girth(cycle(6)) == 6);
    CHECK(geotrans::girth(path(5)) == kUnreachable);
    CHECK(geotrans::diameter(Graph::from_edges(4, {{0, 1}, {2, 3}})) == kUnreachable);
    CHECK(geotrans::girth(cube3()) == 4);
    CHECK(geotrans::diameter(cube3()) == 3);

    auto petersen = kneser(5, 2);
    CHECK(geotrans::girth(petersen) == 5);
    CHECK(geotrans::diameter(petersen) == 2);
    CHECK(geotrans::girth(k33()) == 4);
}

TEST_CASE("girth agrees with the edge removal oracle") {
    for (const Graph& g : {complete(4), cycle(6), cube3(), k33(), kneser(5, 2), kneser(6, 2),
                           rook(3), rook(4), path(5)})
        CHECK(geotrans::girth(g) == oracles::girth_by_edge_removal(g));
}

TEST_CASE("arcs and geodesics on the five cycle") {
    auto c5 = cycle(5);
    auto arcs2 = geotrans::s_arcs(c5, 2);
    CHECK(arcs2.size() == 10);
    // every vertex starts exactly two of them
    for (int v = 0; v < 5; ++v)
        CHECK(std::count_if(arcs2.begin(), arcs2.end(),
                            [v](const auto& a) { return a[0] == v; }) == 2);
    auto geos = geotrans::two_geodesics(c5);
    std::set<std::vector<int>> as(arcs2.begin(), arcs2.end());
    std::set<std::vector<int>> gs(geos.begin(), geos.end());
    CHECK(as == gs);
}

TEST_CASE("complete graphs have no 2-geodesics") {
    CHECK(geotrans::two_geodesics(complete(4)).empty());
}

TEST_CASE("girth at least four makes 2-arcs and 2-geodesics coincide") {
    for (const Graph& g : {cube3(), k33(), kneser(5, 2), cycle(6)}) {
        auto arcs = geotrans::s_arcs(g, 2);
        auto geos = geotrans::two_geodesics(g);
        CHECK(std::set<std::vector<int>>(arcs.begin(), arcs.end()) ==
              std::set<std::vector<int>>(geos.begin(), geos.end()));
    }
}

TEST_CASE("triangles kill 2-arcs but keep them as arcs") {
    // in the complete graph every 2-arc closes a triangle, so none survive
    auto g = complete(4);
    CHECK(geotrans::s_arcs(g, 2).size() == 4 * 3 * 2);
    CHECK(geotrans::two_geodesics(g).empty());
}

TEST_CASE("geodesics walk outward level by level") {
    auto c6 = cycle(6);
    auto from0 = geotrans::s_geodesics_from(c6, 0, 2);
    std::set<std::vector<int>> expect{{0, 1, 2}, {0, 5, 4}};
    CHECK(std::set<std::vector<int>>(from0.begin(), from0.end()) == expect);
    auto three = geotrans::s_geodesics_from(c6, 0, 3);
    CHECK(three.size() == 2);
    auto all2 = geotrans::s_geodesics(c6, 2);
    CHECK(all2.size() == 12);
    CHECK(geotrans::s_geodesics(c6, 3).size() == 12);
    // the antipode is reached by two geodesics from each side but they are
    // still counted from their own start vertex only
    CHECK_THROWS_AS(geotrans::s_geodesics(c6, 2, 5), CapExceeded);
    CHECK_THROWS_AS(geotrans::s_arcs(c6, 2, 5), CapExceeded);
}

TEST_CASE("kneser graph on pairs from six") {
    auto kg = kneser(6, 2);
    CHECK(kg.n() == 15);
    CHECK(kg.regular_valency() == 6);
    CHECK(geotrans::girth(kg) == 3);
    CHECK(geotrans::diameter(kg) == 2);
    CHECK(geotrans::s_arcs(kg, 1).size() == 90);
    CHECK(geotrans::two_geodesics(kg).size() == 360);
    CHECK(geotrans::s_arcs(kg, 2).size() == 450);

    auto f = geotrans::f_membership(kg);
    REQUIRE(f.has_value());
    CHECK(f->first == 3);
    CHECK(f->second == 2);

    // from a fixed vertex, each neighbour sees exactly four vertices at
    // distance two from the start
    auto geos = geotrans::two_geodesics(kg);
    for (int v : kg.neighbors(0))
        CHECK(std::count_if(geos.begin(), geos.end(),
                            [v](const auto& t) { return t[0] == 0 && t[1] == v; }) == 4);
}

TEST_CASE("local structure classification") {
    auto c6 = cycle(6);
    auto shape = geotrans::classify_local(c6, 0);
    CHECK(shape.kind == LocalShape::Kind::mKr);
    CHECK(shape.m == 2);
    CHECK(shape.r == 1);

    auto k4 = complete(4);
    shape = geotrans::classify_local(k4, 2);
    CHECK(shape.kind == LocalShape::Kind::mKr);
    CHECK(shape.m == 1);
    CHECK(shape.r == 3);

    // rook graphs are locally two cliques
    shape = geotrans::classify_local(rook(5), 7);
    CHECK(shape.kind == LocalShape::Kind::mKr);
    CHECK(shape.m == 2);
    CHECK(shape.r == 4);

    // the cube is locally three isolated vertices
    shape = geotrans::classify_local(cube3(), 0);
    CHECK(shape.m == 3);
    CHECK(shape.r == 1);

    // an isolated vertex reports Other with m = 0
    auto lonely = Graph::from_edges(3, {{1, 2}});
    shape = geotrans::classify_local(lonely, 0);
    CHECK(shape.kind == LocalShape::Kind::Other);
    CHECK(shape.m == 0);
}

TEST_CASE("a locally connected diameter two example") {
    // the complement of the 4x4 rook graph is locally connected of diameter 2
    auto g = geotrans::complement(rook(4));
    auto shape = geotrans::classify_local(g, 0);
    CHECK(shape.kind == LocalShape::Kind::ConnectedDiam2);
}

TEST_CASE("family membership") {
    auto f = geotrans::f_membership(cycle(6));
    REQUIRE(f.has_value());
    CHECK(*f == std::make_pair(2, 1));

    f = geotrans::f_membership(rook(5));
    REQUIRE(f.has_value());
    CHECK(*f == std::make_pair(2, 4));

    CHECK(!geotrans::f_membership(Graph::from_edges(4, {{0, 1}, {2, 3}})).has_value());
    // the star has different shapes at the hub and the leaves
    CHECK(!geotrans::f_membership(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})).has_value());
    // locally connected graphs are excluded
    CHECK(!geotrans::f_membership(geotrans::complement(rook(4))).has_value());

    // valency = m*r and clique count = n*m/(r+1) whenever membership holds
    for (const Graph& g : {cycle(6), rook(5), kneser(6, 2), cube3()}) {
        auto mr = geotrans::f_membership(g);
        REQUIRE(mr.has_value());
        auto [m, r] = *mr;
        CHECK(g.regular_valency() == m * r);
        auto cliques = geotrans::maximal_cliques(g);
        CHECK(static_cast<long long>(cliques.size()) ==
              static_cast<long long>(g.n()) * m / (r + 1));
        for (const auto& c : cliques) CHECK(static_cast<int>(c.size()) == r + 1);
    }
}

TEST_CASE("maximal cliques match the subset oracle") {
    auto shared_edge =
        Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    for (const Graph& g : {complete(4), cycle(6), kneser(5, 2), cube3(), rook(3), rook(4),
                           kneser(6, 2), shared_edge, path(5)})
        CHECK(geotrans::maximal_cliques(g) == oracles::cliques_by_subsets(g));
}

TEST_CASE("clique counts on the named instances") {
    CHECK(geotrans::maximal_cliques(kneser(6, 2)).size() == 15);
    auto k4 = geotrans::maximal_cliques(complete(4));
    REQUIRE(k4.size() == 1);
    CHECK(k4[0] == std::vector<int>{0, 1, 2, 3});
    // rows and columns of the five by five rook board
    auto rk = geotrans::maximal_cliques(rook(5));
    CHECK(rk.size() == 10);
    for (const auto& c : rk) CHECK(c.size() == 5);
}

TEST_CASE("complement") {
    auto pet = kneser(5, 2);
    CHECK(geotrans::complement(geotrans::complement(pet)) == pet);
    auto empty5 = geotrans::complement(complete(5));
    CHECK(empty5.edge_count() == 0);
    CHECK(geotrans::complement(rook(5)).regular_valency() == 16);
}

TEST_CASE("induced subgraphs and bipartitions") {
    auto g = cycle(6);
    auto sub = geotrans::induced_subgraph(g, {0, 1, 2});
    CHECK(sub.n() == 3);
    CHECK(sub.edge_count() == 2);
    CHECK(sub.adjacent(0, 1));
    CHECK(sub.adjacent(1, 2));
    CHECK_THROWS_AS(geotrans::induced_subgraph(g, {0, 0}), InvalidInput);

    auto sides = geotrans::bipartition(k33());
    REQUIRE(sides.has_value());
    CHECK(sides->first == std::vector<int>{0, 1, 2});
    CHECK(sides->second == std::vector<int>{3, 4, 5});
    CHECK(!geotrans::bipartition(cycle(5)).has_value());
    CHECK(geotrans::bipartition(cube3()).has_value());
}

TEST_CASE("automorphism check") {
    auto c5 = cycle(5);
    CHECK(geotrans::is_automorphism(c5, Permutation::identity(5)));
    CHECK(geotrans::is_automorphism(c5, Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})));
    CHECK(!geotrans::is_automorphism(c5, Permutation::from_cycles(5, {{0, 2}})));
    CHECK_THROWS_AS(geotrans::is_automorphism(c5, Permutation::identity(4)), InvalidInput);

    // swapping the two coordinates preserves the rook board
    auto r5 = rook(5);
    std::vector<int> swap_xy(25);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) swap_xy[x + 5 * y] = y + 5 * x;
    CHECK(geotrans::is_automorphism(r5, Permutation(swap_xy)));
}
