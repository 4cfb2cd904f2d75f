#ifndef GEOTRANS_GRAPH_HPP
#define GEOTRANS_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "geotrans/perm.hpp"

namespace geotrans {

// distances, diameters and girths use this in place of infinity
inline constexpr int kUnreachable = -1;

struct LocalShape {
    enum class Kind { mKr, ConnectedDiam2, Other };
    Kind kind = Kind::Other;
    // for mKr: the neighbourhood is m disjoint complete graphs on r vertices;
    // both stay 0 otherwise (an isolated vertex reports Other with m = 0)
    int m = 0;
    int r = 0;

    bool operator==(const LocalShape&) const = default;
};

// Finite simple undirected graph on vertices 0..n-1 with sorted adjacency
// lists. Connectivity is a query, never an assumption.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int u) const;
    bool adjacent(int u, int v) const;
    int valency(int u) const;
    // the common valency, or nothing when vertices disagree
    std::optional<int> regular_valency() const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<int>> adj_;
};

std::vector<int> distances_from(const Graph& g, int u);
bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
int diameter(const Graph& g);  // kUnreachable when disconnected
int girth(const Graph& g);     // kUnreachable for forests

// induced subgraph; vertices are relabelled 0..k-1 in the order given
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// the two sides of a bipartition (side of vertex 0 first by least member),
// or nothing when some component has an odd cycle
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

// all s-arcs: ordered walks (v_0..v_s) along edges that never immediately
// double back. max_tuples < 0 means unlimited.
std::vector<std::vector<int>> s_arcs(const Graph& g, int s, long long max_tuples = -1);

// all s-geodesics: ordered paths (v_0..v_s) with d(v_0, v_i) = i throughout
std::vector<std::vector<int>> s_geodesics(const Graph& g, int s, long long max_tuples = -1);
std::vector<std::vector<int>> s_geodesics_from(const Graph& g, int u, int s,
                                               long long max_tuples = -1);
std::vector<std::vector<int>> two_geodesics(const Graph& g, long long max_tuples = -1);

// subgraph induced on the neighbours of u, in sorted neighbour order
Graph local_subgraph(const Graph& g, int u);
LocalShape classify_local(const Graph& g, int u);

// (m, r) when the graph is connected and looks like mK_r around every
// vertex, with the same m and r everywhere
std::optional<std::pair<int, int>> f_membership(const Graph& g);

// every maximal clique, each sorted, the list sorted lexicographically
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

Graph complement(const Graph& g);

bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace geotrans

#endif
