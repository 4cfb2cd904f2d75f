#ifndef GEOTRANS_CONSTRUCT_HPP
#define GEOTRANS_CONSTRUCT_HPP

#include <utility>
#include <vector>

#include "geotrans/graph.hpp"
#include "geotrans/perm_group.hpp"

namespace geotrans {

// A permutation group together with the graph vertex each domain point
// stands for. Every construction here aligns the two, so labels[i] == i,
// but consumers should go through the labels anyway.
struct LabeledAction {
    PermGroup group;
    std::vector<int> labels;
};

// true when every generator, read through the labels, is an automorphism
bool action_preserves_graph(const Graph& g, const LabeledAction& a);

// Point-line geometry extracted from a graph. Points are 0..points-1, each
// line is a sorted point list, flags pair a point with a line index.
struct IncidenceStructure {
    int points = 0;
    std::vector<std::vector<int>> lines;
    std::vector<std::pair<int, int>> flags;
};

// every line has >= 2 points and two points share at most one line
void validate_partial_linear_space(const IncidenceStructure& s);

// --- vertex-labelled graph families -------------------------------------

// Hamming graph H(d, n): words of length d over n letters, adjacent when
// they differ in one coordinate. Vertex v encodes the word with digit i
// equal to (v / n^i) % n.
Graph hamming(int d, int n, const Caps& caps = {});

// Kneser graph: k-subsets of an n-set, adjacent when disjoint, labelled in
// colex order
Graph kneser(int n, int k);
std::vector<std::vector<int>> colex_subsets(int n, int k);

// words of length k over m letters, adjacent when they differ in exactly
// two coordinates; same vertex encoding as hamming
Graph two_coordinate_graph(int k, int m, const Caps& caps = {});

// even-weight binary words of length n, adjacent when they differ in two
// coordinates; vertex index = rank of the word among even-weight words
Graph halfcube(int n);

// antipodal classes {v, complement(v)} of binary n-words, adjacent when the
// class representatives differ in 1 or n-1 coordinates; the representative
// with top bit 0 gives the vertex index. The valency comes out to n.
Graph foldedcube(int n);

// antipodal classes of binary n-words with class adjacency inherited from
// the halved cube: representatives differing in 2 or n-2 coordinates
Graph folded_halfcube(int n);

// --- coset constructions -------------------------------------------------

struct CosetGraphResult {
    Graph graph;
    LabeledAction action;  // G by right multiplication on the cosets
    bool faithful = false;
    int valency = 0;  // |HgH| / |H|, checked against |H : H cap H^g|
};

// Graph on the right cosets of H = <subgroup_gens> in G, with Hx adjacent
// to Hy when yx^-1 lies in HgH. Requires g outside H (no loops) and HgH
// inverse-closed (undirected edges); violations throw InvalidInput.
CosetGraphResult coset_graph(const PermGroup& G, const std::vector<Permutation>& subgroup_gens,
                             const Permutation& g, const Caps& caps = {});

struct BicosetGraphResult {
    Graph graph;  // cosets of L first, then cosets of R
    LabeledAction action;
    int left_count = 0;
    std::pair<int, int> valencies;  // (L side, R side)
};

// Bipartite graph on the right cosets of L and of R, with Lx adjacent to Ry
// when the cosets intersect. The right multiplication action must be
// faithful, otherwise InvalidInput.
BicosetGraphResult bicoset_graph(const PermGroup& G, const std::vector<Permutation>& left_gens,
                                 const std::vector<Permutation>& right_gens,
                                 const Caps& caps = {});

// --- derived graphs ------------------------------------------------------

struct CliqueGraphResult {
    Graph graph;
    std::vector<std::vector<int>> cliques;  // vertex sets, sorted, lex order
};

// maximal cliques as vertices, adjacent when they share a vertex
CliqueGraphResult clique_graph(const Graph& g);

// the action induced on a clique (or any set) list; ActionNotClosed when a
// generator maps a listed set to an unlisted one
PermGroup clique_action(const PermGroup& G, const std::vector<std::vector<int>>& cliques);

struct IncidenceGraphResult {
    Graph graph;  // points 0..n-1, then lines n..n+l-1
    IncidenceStructure structure;
    std::pair<int, int> valencies;  // (point side, line side)
};

// Point-clique incidence graph. The graph must be locally a disjoint union
// of equal cliques (NotInF otherwise); the geometry is then a partial
// linear space and the incidence graph is biregular.
IncidenceGraphResult incidence_graph(const Graph& g);

// vertex action extended to the point+line domain of the incidence graph
PermGroup incidence_action(const PermGroup& G, const std::vector<std::vector<int>>& lines);

// cells of the partition become vertices, adjacent when any edge crosses
Graph quotient_graph(const Graph& g, const std::vector<std::vector<int>>& partition);

// vertices (u, i) for i in {0, 1} encoded as u + i*n, with (u, i) ~ (v, 1-i)
// for every edge uv
Graph standard_double_cover(const Graph& g);

// graph on one side (0 or 1) of a connected bipartite graph, vertices kept
// in increasing original order, adjacent when at distance exactly 2
Graph distance2_graph(const Graph& g, int side);

// --- groups --------------------------------------------------------------

PermGroup sym(int n);
PermGroup alt(int n);

// PSL(2, p) on the projective line, points 0..p-1 plus infinity at index p;
// generated by x -> x+1 and x -> -1/x
PermGroup psl2(int p);

// A wr Sym(d) in product action on n^d points, n = A.degree(), with the
// same word encoding as hamming(d, n)
PermGroup wreath_product_action(const PermGroup& A, int d, const Caps& caps = {});

struct SetActionResult {
    PermGroup group;
    std::vector<std::vector<int>> subsets;  // colex order
};

// the action induced by G on the k-subsets of its domain
SetActionResult induced_set_action(const PermGroup& G, int k, const Caps& caps = {});

// Seed data for the sextic coset graphs on PSL(2, p), p = +-1 mod 24: a
// subgroup H isomorphic to Sym(4), an element h of order 4 in H, and an
// element g of order 3 centralizing h with g outside H. Elements are found
// by a deterministic scan, so repeated calls agree. NotFound when p is
// outside the residue classes or the scan is capped.
struct Psl2S4Seed {
    std::vector<Permutation> subgroup_gens;
    Permutation h;
    Permutation g;
};
Psl2S4Seed find_psl2_s4_seed(int p, const Caps& caps = {});

// --- projective planes and bundled graphs --------------------------------

struct PgIncidenceResult {
    Graph graph;  // points 0..N-1, lines N..2N-1, N = q^2+q+1
    LabeledAction action;  // PSL(3, q) on points and lines
    int point_count = 0;
};

// point-line incidence graph of PG(2, q), q in {2, 3, 4}
PgIncidenceResult pg_incidence(int q);

// the 90-vertex cubic Foster graph, loaded from the bundled asset
Graph foster_graph();

}  // namespace geotrans

#endif
