#include "geotrans/construct.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "geotrans/errors.hpp"
#include "geotrans/io.hpp"

namespace geotrans {

namespace {

// V(H(d, n)) as a mixed-radix word: digit i of v is (v / n^i) % n
std::vector<long long> place_values(int d, long long n) {
    std::vector<long long> pw(d);
    long long p = 1;
    for (int i = 0; i < d; ++i) {
        pw[i] = p;
        p *= n;
    }
    return pw;
}

long long checked_word_count(int d, int n, long long budget, const char* what) {
    if (d < 1 || n < 1) throw InvalidInput(std::string(what) + ": parameters must be positive");
    long long count = 1;
    for (int i = 0; i < d; ++i) {
        if (count > budget / n) throw CapExceeded(std::string(what) + ": too many vertices");
        count *= n;
    }
    return count;
}

int popcount_ll(long long v) { return std::popcount(static_cast<unsigned long long>(v)); }

}  // namespace

bool action_preserves_graph(const Graph& g, const LabeledAction& a) {
    int n = g.n();
    if (a.group.degree() != n || static_cast<int>(a.labels.size()) != n) return false;
    std::vector<int> seen(n, 0);
    for (int v : a.labels) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (const auto& p : a.group.generators()) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[a.labels[i]] = a.labels[p[i]];
        if (!is_automorphism(g, Permutation(std::move(img)))) return false;
    }
    return true;
}

void validate_partial_linear_space(const IncidenceStructure& s) {
    std::set<std::pair<int, int>> collinear;
    for (const auto& line : s.lines) {
        if (line.size() < 2) throw InvalidInput("a line has fewer than two points");
        for (std::size_t i = 0; i < line.size(); ++i) {
            int p = line[i];
            if (p < 0 || p >= s.points) throw InvalidInput("line contains an unknown point");
            if (i > 0 && line[i - 1] >= p) throw InvalidInput("line points must be sorted");
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                if (!collinear.insert({p, line[j]}).second)
                    throw InvalidInput("two points lie on more than one line");
            }
        }
    }
}

Graph hamming(int d, int n, const Caps& caps) {
    long long count = checked_word_count(d, n, caps.tuple_int_cap / std::max(1, d * (n - 1) / 2 + 1),
                                         "hamming");
    auto pw = place_values(d, n);
    std::vector<std::pair<int, int>> edges;
    for (long long v = 0; v < count; ++v) {
        for (int i = 0; i < d; ++i) {
            int digit = static_cast<int>((v / pw[i]) % n);
            for (int c = digit + 1; c < n; ++c)
                edges.emplace_back(static_cast<int>(v),
                                   static_cast<int>(v + (c - digit) * pw[i]));
        }
    }
    return Graph::from_edges(static_cast<int>(count), edges);
}

std::vector<std::vector<int>> colex_subsets(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw InvalidInput("colex_subsets: need 0 <= k <= n");
    std::vector<std::vector<int>> out;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        // colex successor: bump the lowest entry that has room, reset below
        int i = 0;
        while (i < k && s[i] + 1 == (i + 1 < k ? s[i + 1] : n)) ++i;
        if (i == k) break;
        ++s[i];
        for (int j = 0; j < i; ++j) s[j] = j;
    }
    return out;
}

Graph kneser(int n, int k) {
    if (k < 1 || n < 2 * k) throw InvalidInput("kneser: need 1 <= k and n >= 2k");
    long long count = 1;
    for (int i = 0; i < k; ++i) count = count * (n - i) / (i + 1);
    if (count > 5'000'000) throw CapExceeded("kneser: too many subsets");
    auto subsets = colex_subsets(n, k);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        for (std::size_t b = a + 1; b < subsets.size(); ++b) {
            bool meet = false;
            std::size_t i = 0, j = 0;
            while (i < subsets[a].size() && j < subsets[b].size()) {
                if (subsets[a][i] == subsets[b][j]) {
                    meet = true;
                    break;
                }
                (subsets[a][i] < subsets[b][j] ? i : j)++;
            }
            if (!meet) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return Graph::from_edges(static_cast<int>(subsets.size()), edges);
}

Graph two_coordinate_graph(int k, int m, const Caps& caps) {
    if (k < 2 || m < 2) throw InvalidInput("two_coordinate_graph: need k >= 2 and m >= 2");
    long long per_vertex = static_cast<long long>(k) * (k - 1) / 2 * (m - 1) * (m - 1);
    long long count =
        checked_word_count(k, m, caps.tuple_int_cap / std::max(1LL, per_vertex), "two_coordinate_graph");
    auto pw = place_values(k, m);
    std::vector<std::pair<int, int>> edges;
    for (long long v = 0; v < count; ++v) {
        for (int i = 0; i < k; ++i) {
            int di = static_cast<int>((v / pw[i]) % m);
            for (int j = i + 1; j < k; ++j) {
                int dj = static_cast<int>((v / pw[j]) % m);
                for (int ci = 0; ci < m; ++ci) {
                    if (ci == di) continue;
                    for (int cj = 0; cj < m; ++cj) {
                        if (cj == dj) continue;
                        long long w = v + (ci - di) * pw[i] + (cj - dj) * pw[j];
                        if (w > v) edges.emplace_back(static_cast<int>(v), static_cast<int>(w));
                    }
                }
            }
        }
    }
    return Graph::from_edges(static_cast<int>(count), edges);
}

Graph halfcube(int n) {
    if (n < 1 || n > 20) throw InvalidInput("halfcube: need 1 <= n <= 20");
    long long full = 1LL << n;
    std::vector<int> index(full, -1);
    int count = 0;
    for (long long v = 0; v < full; ++v)
        if (popcount_ll(v) % 2 == 0) index[v] = count++;
    std::vector<std::pair<int, int>> edges;
    for (long long v = 0; v < full; ++v) {
        if (index[v] < 0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                long long w = v ^ (1LL << i) ^ (1LL << j);
                if (w > v) edges.emplace_back(index[v], index[w]);
            }
    }
    return Graph::from_edges(count, edges);
}

namespace {

// representative of the antipodal class of w: whichever of w, ~w clears the
// top bit
long long fold_rep(long long w, int n) {
    long long full = (1LL << n) - 1;
    return (w >> (n - 1)) & 1 ? full ^ w : w;
}

}  // namespace

Graph foldedcube(int n) {
    if (n < 2 || n > 20) throw InvalidInput("foldedcube: need 2 <= n <= 20");
    int count = 1 << (n - 1);
    std::vector<std::pair<int, int>> edges;
    for (long long v = 0; v < count; ++v) {
        for (int i = 0; i < n; ++i) {
            long long u = fold_rep(v ^ (1LL << i), n);
            if (u != v) edges.emplace_back(static_cast<int>(std::min(v, u)),
                                           static_cast<int>(std::max(v, u)));
        }
    }
    return Graph::from_edges(count, edges);
}

Graph folded_halfcube(int n) {
    if (n < 2 || n > 20 || n % 2 != 0)
        throw InvalidInput("folded_halfcube: need even n with 2 <= n <= 20");
    long long half = 1LL << (n - 1);
    std::vector<int> index(half, -1);
    int count = 0;
    for (long long v = 0; v < half; ++v)
        if (popcount_ll(v) % 2 == 0) index[v] = count++;
    std::vector<std::pair<int, int>> edges;
    for (long long v = 0; v < half; ++v) {
        if (index[v] < 0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                long long u = fold_rep(v ^ (1LL << i) ^ (1LL << j), n);
                if (u != v) edges.emplace_back(std::min(index[v], index[u]),
                                               std::max(index[v], index[u]));
            }
    }
    return Graph::from_edges(count, edges);
}

// --- coset machinery ------------------------------------------------------

namespace {

// the chosen representative of the coset Sx is the lexicographically least
// image vector among {sx : s in S}
Permutation coset_rep(const std::vector<Permutation>& subgroup_elements, const Permutation& x) {
    std::vector<int> best;
    Permutation scratch = Permutation::identity(x.degree());
    for (const auto& s : subgroup_elements) {
        compose_into(s, x, scratch);
        if (best.empty() || scratch.images() < best) best = scratch.images();
    }
    return Permutation(std::move(best));
}

struct CosetSpace {
    std::vector<Permutation> reps;
    std::map<std::vector<int>, int> index;

    int id(const Permutation& rep) const {
        auto it = index.find(rep.images());
        if (it == index.end()) throw std::logic_error("coset representative not enumerated");
        return it->second;
    }
};

CosetSpace enumerate_cosets(const PermGroup& G, const std::vector<Permutation>& subgroup_elements,
                            long long expected, const char* what) {
    CosetSpace space;
    Permutation start = coset_rep(subgroup_elements, Permutation::identity(G.degree()));
    space.index.emplace(start.images(), 0);
    space.reps.push_back(std::move(start));
    for (std::size_t head = 0; head < space.reps.size(); ++head) {
        for (const auto& s : G.generators()) {
            Permutation next = coset_rep(subgroup_elements, compose(space.reps[head], s));
            auto [it, fresh] = space.index.emplace(next.images(), static_cast<int>(space.reps.size()));
            (void)it;
            if (fresh) space.reps.push_back(std::move(next));
        }
    }
    if (static_cast<long long>(space.reps.size()) != expected)
        throw std::logic_error(std::string(what) + ": coset count disagrees with the group index");
    return space;
}

std::vector<Permutation> subgroup_elements_in(const PermGroup& G,
                                              const std::vector<Permutation>& gens,
                                              const Caps& caps, const char* what) {
    if (gens.empty()) throw InvalidInput(std::string(what) + ": subgroup needs generators");
    for (const auto& p : gens) {
        if (p.degree() != G.degree())
            throw InvalidInput(std::string(what) + ": subgroup generator degree mismatch");
        if (!G.contains(p))
            throw InvalidInput(std::string(what) + ": subgroup generator outside the group");
    }
    PermGroup H = PermGroup::from_generators(gens);
    return H.elements(caps.element_enumeration_cap);
}

long long coset_count(const PermGroup& G, std::size_t subgroup_order, const Caps& caps,
                      const char* what) {
    mpz_class idx = G.order() / static_cast<unsigned long>(subgroup_order);
    if (idx * static_cast<unsigned long>(subgroup_order) != G.order())
        throw std::logic_error(std::string(what) + ": subgroup order does not divide group order");
    if (idx > static_cast<unsigned long>(caps.element_enumeration_cap))
        throw CapExceeded(std::string(what) + ": too many cosets");
    return idx.get_si();
}

}  // namespace

CosetGraphResult coset_graph(const PermGroup& G, const std::vector<Permutation>& subgroup_gens,
                             const Permutation& g, const Caps& caps) {
    if (g.degree() != G.degree()) throw InvalidInput("coset_graph: g degree mismatch");
    if (!G.contains(g)) throw InvalidInput("coset_graph: g outside the group");
    auto helems = subgroup_elements_in(G, subgroup_gens, caps, "coset_graph");
    PermGroup H = PermGroup::from_generators(subgroup_gens);
    if (H.contains(g)) throw InvalidInput("coset_graph: g lies in the subgroup");

    // connection set D = HgH, assembled as full element set to test symmetry
    std::set<Permutation> connection;
    for (const auto& h1 : helems) {
        Permutation h1g = compose(h1, g);
        for (const auto& h2 : helems) connection.insert(compose(h1g, h2));
    }
    for (const auto& d : connection)
        if (!connection.count(d.inverse()))
            throw InvalidInput("coset_graph: HgH is not inverse-closed, so edges are not well defined");

    if (connection.size() % helems.size() != 0)
        throw std::logic_error("coset_graph: |HgH| not a multiple of |H|");
    int valency = static_cast<int>(connection.size() / helems.size());

    // cross-check the valency as the index |H : H cap H^g|
    Permutation ginv = g.inverse();
    std::size_t meet = 0;
    for (const auto& h : helems)
        if (H.contains(compose(compose(g, h), ginv))) ++meet;
    if (helems.size() % meet != 0 || static_cast<int>(helems.size() / meet) != valency)
        throw std::logic_error("coset_graph: valency disagrees with |H : H cap H^g|");

    // one representative per right coset Hd inside HgH is enough to walk edges
    std::set<std::vector<int>> seen;
    std::vector<Permutation> arc_reps;
    for (const auto& d : connection) {
        Permutation rep = coset_rep(helems, d);
        if (seen.insert(rep.images()).second) arc_reps.push_back(std::move(rep));
    }
    if (static_cast<int>(arc_reps.size()) != valency)
        throw std::logic_error("coset_graph: arc representative count disagrees with the valency");

    long long count = coset_count(G, helems.size(), caps, "coset_graph");
    CosetSpace space = enumerate_cosets(G, helems, count, "coset_graph");

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(space.reps.size()); ++i) {
        for (const auto& d : arc_reps) {
            int j = space.id(coset_rep(helems, compose(d, space.reps[i])));
            if (i < j) edges.emplace_back(i, j);
        }
    }
    Graph graph = Graph::from_edges(static_cast<int>(space.reps.size()), edges);
    if (graph.regular_valency() != std::optional<int>(valency))
        throw std::logic_error("coset_graph: graph valency disagrees with |HgH| / |H|");

    std::vector<Permutation> action_gens;
    for (const auto& s : G.generators()) {
        std::vector<int> img(space.reps.size());
        for (int i = 0; i < static_cast<int>(space.reps.size()); ++i)
            img[i] = space.id(coset_rep(helems, compose(space.reps[i], s)));
        action_gens.emplace_back(std::move(img));
    }
    LabeledAction action{PermGroup::from_generators(action_gens), {}};
    action.labels.resize(space.reps.size());
    for (int i = 0; i < static_cast<int>(space.reps.size()); ++i) action.labels[i] = i;
    if (!action_preserves_graph(graph, action))
        throw std::logic_error("coset_graph: right multiplication does not preserve the graph");

    bool faithful = action.group.order() == G.order();
    return {std::move(graph), std::move(action), faithful, valency};
}

BicosetGraphResult bicoset_graph(const PermGroup& G, const std::vector<Permutation>& left_gens,
                                 const std::vector<Permutation>& right_gens, const Caps& caps) {
    auto lel = subgroup_elements_in(G, left_gens, caps, "bicoset_graph");
    auto rel = subgroup_elements_in(G, right_gens, caps, "bicoset_graph");
    PermGroup R = PermGroup::from_generators(right_gens);

    long long nl = coset_count(G, lel.size(), caps, "bicoset_graph");
    long long nr = coset_count(G, rel.size(), caps, "bicoset_graph");
    CosetSpace lspace = enumerate_cosets(G, lel, nl, "bicoset_graph");
    CosetSpace rspace = enumerate_cosets(G, rel, nr, "bicoset_graph");

    // Lx meets Ry exactly when Ry = R(lx) for some l, so the right-side
    // neighbours of Lx are the cosets R(lx)
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(lspace.reps.size()); ++i) {
        std::set<int> nbrs;
        for (const auto& l : lel) nbrs.insert(rspace.id(coset_rep(rel, compose(l, lspace.reps[i]))));
        for (int j : nbrs) edges.emplace_back(i, static_cast<int>(nl) + j);
    }
    int total = static_cast<int>(nl + nr);
    Graph graph = Graph::from_edges(total, edges);

    std::size_t meet = 0;
    for (const auto& l : lel)
        if (R.contains(l)) ++meet;
    auto left_valency = static_cast<int>(lel.size() / meet);
    auto right_valency = static_cast<int>(rel.size() / meet);
    if (graph.valency(0) != left_valency || graph.valency(static_cast<int>(nl)) != right_valency)
        throw std::logic_error("bicoset_graph: valencies disagree with |L : L cap R|, |R : L cap R|");

    std::vector<Permutation> action_gens;
    for (const auto& s : G.generators()) {
        std::vector<int> img(total);
        for (int i = 0; i < static_cast<int>(nl); ++i)
            img[i] = lspace.id(coset_rep(lel, compose(lspace.reps[i], s)));
        for (int j = 0; j < static_cast<int>(nr); ++j)
            img[static_cast<int>(nl) + j] =
                static_cast<int>(nl) + rspace.id(coset_rep(rel, compose(rspace.reps[j], s)));
        action_gens.emplace_back(std::move(img));
    }
    LabeledAction action{PermGroup::from_generators(action_gens), {}};
    action.labels.resize(total);
    for (int i = 0; i < total; ++i) action.labels[i] = i;
    if (!action_preserves_graph(graph, action))
        throw std::logic_error("bicoset_graph: right multiplication does not preserve the graph");
    if (action.group.order() != G.order())
        throw InvalidInput("bicoset_graph: the action on the cosets has a kernel");

    return {std::move(graph), std::move(action), static_cast<int>(nl),
            {left_valency, right_valency}};
}

// --- derived graphs -------------------------------------------------------

CliqueGraphResult clique_graph(const Graph& g) {
    auto cliques = maximal_cliques(g);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < cliques.size(); ++a) {
        for (std::size_t b = a + 1; b < cliques.size(); ++b) {
            std::size_t i = 0, j = 0;
            while (i < cliques[a].size() && j < cliques[b].size()) {
                if (cliques[a][i] == cliques[b][j]) {
                    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
                    break;
                }
                (cliques[a][i] < cliques[b][j] ? i : j)++;
            }
        }
    }
    return {Graph::from_edges(static_cast<int>(cliques.size()), edges), std::move(cliques)};
}

PermGroup clique_action(const PermGroup& G, const std::vector<std::vector<int>>& cliques) {
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        index.emplace(cliques[i], static_cast<int>(i));
    std::vector<Permutation> gens;
    for (const auto& p : G.generators()) {
        std::vector<int> img(cliques.size());
        for (std::size_t i = 0; i < cliques.size(); ++i) {
            auto it = index.find(apply_set(p, cliques[i]));
            if (it == index.end())
                throw ActionNotClosed("a generator maps a clique outside the clique list");
            img[i] = it->second;
        }
        gens.emplace_back(std::move(img));
    }
    if (gens.empty()) return PermGroup::trivial(static_cast<int>(cliques.size()));
    return PermGroup::from_generators(gens);
}

IncidenceGraphResult incidence_graph(const Graph& g) {
    auto f = f_membership(g);
    if (!f) throw NotInF("the graph is not connected and locally a union of equal cliques");
    auto [m, r] = *f;

    IncidenceStructure s;
    s.points = g.n();
    s.lines = maximal_cliques(g);
    std::vector<int> lines_on(g.n(), 0);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t j = 0; j < s.lines.size(); ++j) {
        if (static_cast<int>(s.lines[j].size()) != r + 1)
            throw std::logic_error("incidence_graph: clique size disagrees with the local shape");
        for (int p : s.lines[j]) {
            s.flags.emplace_back(p, static_cast<int>(j));
            edges.emplace_back(p, g.n() + static_cast<int>(j));
            ++lines_on[p];
        }
    }
    for (int p = 0; p < g.n(); ++p)
        if (lines_on[p] != m)
            throw std::logic_error("incidence_graph: line count per point disagrees with the local shape");
    validate_partial_linear_space(s);

    Graph graph = Graph::from_edges(g.n() + static_cast<int>(s.lines.size()), edges);
    return {std::move(graph), std::move(s), {m, r + 1}};
}

PermGroup incidence_action(const PermGroup& G, const std::vector<std::vector<int>>& lines) {
    int n = G.degree();
    std::map<std::vector<int>, int> index;
    for (std::size_t j = 0; j < lines.size(); ++j) index.emplace(lines[j], static_cast<int>(j));
    std::vector<Permutation> gens;
    for (const auto& p : G.generators()) {
        std::vector<int> img(n + lines.size());
        for (int v = 0; v < n; ++v) img[v] = p[v];
        for (std::size_t j = 0; j < lines.size(); ++j) {
            auto it = index.find(apply_set(p, lines[j]));
            if (it == index.end())
                throw ActionNotClosed("a generator maps a line outside the line list");
            img[n + j] = n + it->second;
        }
        gens.emplace_back(std::move(img));
    }
    if (gens.empty()) return PermGroup::trivial(n + static_cast<int>(lines.size()));
    return PermGroup::from_generators(gens);
}

Graph quotient_graph(const Graph& g, const std::vector<std::vector<int>>& partition) {
    std::vector<int> cell_of(g.n(), -1);
    for (std::size_t c = 0; c < partition.size(); ++c) {
        if (partition[c].empty()) throw InvalidInput("quotient_graph: empty cell");
        for (int v : partition[c]) {
            if (v < 0 || v >= g.n() || cell_of[v] != -1)
                throw InvalidInput("quotient_graph: partition must cover each vertex exactly once");
            cell_of[v] = static_cast<int>(c);
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (cell_of[v] == -1) throw InvalidInput("quotient_graph: partition misses a vertex");
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges())
        if (cell_of[u] != cell_of[v]) edges.emplace_back(cell_of[u], cell_of[v]);
    return Graph::from_edges(static_cast<int>(partition.size()), edges);
}

Graph standard_double_cover(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, v + g.n());
        edges.emplace_back(v, u + g.n());
    }
    return Graph::from_edges(2 * g.n(), edges);
}

Graph distance2_graph(const Graph& g, int side) {
    if (side != 0 && side != 1) throw InvalidInput("distance2_graph: side must be 0 or 1");
    if (!is_connected(g)) throw InvalidInput("distance2_graph: graph must be connected");
    auto parts = bipartition(g);
    if (!parts) throw InvalidInput("distance2_graph: graph must be bipartite");
    std::vector<int> verts = side == 0 ? parts->first : parts->second;
    std::sort(verts.begin(), verts.end());
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto dist = distances_from(g, verts[i]);
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (dist[verts[j]] == 2) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    return Graph::from_edges(static_cast<int>(verts.size()), edges);
}

// --- groups ---------------------------------------------------------------

PermGroup sym(int n) {
    if (n < 1) throw InvalidInput("sym: need n >= 1");
    if (n == 1) return PermGroup::trivial(1);
    std::vector<Permutation> gens;
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    if (n > 2) {
        std::vector<int> cycle(n);
        for (int i = 0; i < n; ++i) cycle[i] = i;
        gens.push_back(Permutation::from_cycles(n, {cycle}));
    }
    return PermGroup::from_generators(gens);
}

PermGroup alt(int n) {
    if (n < 1) throw InvalidInput("alt: need n >= 1");
    if (n <= 2) return PermGroup::trivial(n);
    std::vector<Permutation> gens;
    gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
    if (n > 3) {
        // the rotation fixing 0 is even exactly when n is even; otherwise
        // rotate everything
        std::vector<int> cycle;
        for (int i = n % 2 == 0 ? 1 : 0; i < n; ++i) cycle.push_back(i);
        gens.push_back(Permutation::from_cycles(n, {cycle}));
    }
    return PermGroup::from_generators(gens);
}

namespace {

long long modpow(long long base, long long exp, long long mod) {
    long long out = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) out = out * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return out;
}

}  // namespace

PermGroup psl2(int p) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw InvalidInput("psl2: p must be prime");
    long long pl = p;
    Caps defaults;
    if ((pl + 1) * (pl + 1) > defaults.tuple_int_cap) throw CapExceeded("psl2: p too large");

    std::vector<int> shift(p + 1), flip(p + 1);
    for (int x = 0; x < p; ++x) shift[x] = (x + 1) % p;
    shift[p] = p;  // infinity stays put
    flip[0] = p;
    flip[p] = 0;
    for (int x = 1; x < p; ++x)
        flip[x] = static_cast<int>((pl - modpow(x, pl - 2, pl)) % pl);

    PermGroup G = PermGroup::from_generators(
        {Permutation(std::move(shift)), Permutation(std::move(flip))});
    mpz_class expected = mpz_class(p) * (mpz_class(p) * p - 1);
    if (p % 2 == 1) expected /= 2;
    if (G.order() != expected) throw std::logic_error("psl2: generated order is off");
    return G;
}

PermGroup wreath_product_action(const PermGroup& A, int d, const Caps& caps) {
    int n = A.degree();
    if (n < 1 || d < 1) throw InvalidInput("wreath_product_action: need degree and d >= 1");
    long long count = checked_word_count(d, n, caps.tuple_int_cap, "wreath_product_action");
    auto pw = place_values(d, n);

    std::vector<Permutation> gens;
    for (const auto& a : A.generators()) {
        std::vector<int> img(count);
        for (long long v = 0; v < count; ++v) {
            int x0 = static_cast<int>(v % n);
            img[v] = static_cast<int>(v + (a[x0] - x0));
        }
        gens.emplace_back(std::move(img));
    }
    if (d >= 2) {
        std::vector<int> swap01(count);
        for (long long v = 0; v < count; ++v) {
            long long x0 = v % n, x1 = (v / n) % n;
            swap01[v] = static_cast<int>(v - x0 - x1 * n + x1 + x0 * n);
        }
        gens.emplace_back(std::move(swap01));
    }
    if (d >= 3) {
        std::vector<int> rotate(count);
        for (long long v = 0; v < count; ++v) {
            long long w = 0, rest = v;
            for (int i = 0; i < d; ++i) {
                w += (rest % n) * pw[(i + 1) % d];
                rest /= n;
            }
            rotate[v] = static_cast<int>(w);
        }
        gens.emplace_back(std::move(rotate));
    }
    if (gens.empty()) return PermGroup::trivial(static_cast<int>(count));

    PermGroup G = PermGroup::from_generators(gens);
    mpz_class expected;
    mpz_pow_ui(expected.get_mpz_t(), A.order().get_mpz_t(), static_cast<unsigned long>(d));
    for (int i = 2; i <= d; ++i) expected *= i;
    if (G.order() != expected) throw std::logic_error("wreath_product_action: generated order is off");
    return G;
}

SetActionResult induced_set_action(const PermGroup& G, int k, const Caps& caps) {
    int n = G.degree();
    if (k < 1 || k > n) throw InvalidInput("induced_set_action: need 1 <= k <= degree");
    long long count = 1;
    for (int i = 0; i < k; ++i) {
        count = count * (n - i) / (i + 1);
        if (count * k > caps.tuple_int_cap) throw CapExceeded("induced_set_action: too many subsets");
    }
    auto subsets = colex_subsets(n, k);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < subsets.size(); ++i) index.emplace(subsets[i], static_cast<int>(i));
    std::vector<Permutation> gens;
    for (const auto& p : G.generators()) {
        std::vector<int> img(subsets.size());
        for (std::size_t i = 0; i < subsets.size(); ++i)
            img[i] = index.at(apply_set(p, subsets[i]));
        gens.emplace_back(std::move(img));
    }
    PermGroup group = gens.empty() ? PermGroup::trivial(static_cast<int>(subsets.size()))
                                   : PermGroup::from_generators(gens);
    return {std::move(group), std::move(subsets)};
}

Psl2S4Seed find_psl2_s4_seed(int p, const Caps& caps) {
    PermGroup G = psl2(p);
    int residue = p % 24;
    if (residue != 1 && residue != 23)
        throw NotFound("find_psl2_s4_seed: Sym(4) subgroups need p = +-1 mod 24");
    if (G.order() > static_cast<unsigned long>(caps.element_enumeration_cap))
        throw NotFound("find_psl2_s4_seed: group too large to scan under the current caps");

    auto els = G.elements(caps.element_enumeration_cap);
    std::vector<const Permutation*> involutions, cubes;
    for (const auto& e : els) {
        auto o = e.order();
        if (o == 2) involutions.push_back(&e);
        if (o == 3) cubes.push_back(&e);
    }

    // An involution and an order-3 element generating a subgroup of order 24
    // pin down Sym(4): no other order-24 subgroup of PSL(2, p) is generated
    // by such a pair. The shape checks below guard the claim.
    for (const Permutation* x : involutions) {
        for (const Permutation* y : cubes) {
            PermGroup H = PermGroup::from_generators({*x, *y});
            if (H.order() != 24 || H.is_abelian()) continue;
            auto mins = H.minimal_normal_subgroups(caps);
            if (mins.size() != 1 || mins[0].order() != 4) continue;

            Permutation h = Permutation::identity(G.degree());
            bool have_h = false;
            for (const auto& e : H.elements(24)) {
                if (e.order() == 4) {
                    h = e;
                    have_h = true;
                    break;
                }
            }
            if (!have_h) continue;
            for (const Permutation* z : cubes) {
                if (commute(*z, h) && !H.contains(*z)) return {{*x, *y}, std::move(h), *z};
            }
        }
    }
    throw NotFound("find_psl2_s4_seed: scan found no suitable subgroup");
}

// --- projective planes and bundled graphs ----------------------------------

namespace {

struct FieldTable {
    int q = 0;
    int mul4[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};

    int add(int a, int b) const { return q == 3 ? (a + b) % 3 : a ^ b; }
    int mul(int a, int b) const { return q == 4 ? mul4[a][b] : a * b % q; }
    int neg(int a) const { return q == 3 ? (3 - a) % 3 : a; }
    int inv(int a) const {
        for (int b = 1; b < q; ++b)
            if (mul(a, b) == 1) return b;
        throw std::logic_error("field inverse of zero");
    }
};

using Triple = std::array<int, 3>;
using Matrix = std::array<Triple, 3>;

Triple normalize_projective(const FieldTable& f, Triple v) {
    int lead = 0;
    while (lead < 3 && v[lead] == 0) ++lead;
    if (lead == 3) throw std::logic_error("zero vector has no projective class");
    int scale = f.inv(v[lead]);
    for (int& x : v) x = f.mul(scale, x);
    return v;
}

Triple mat_vec(const FieldTable& f, const Matrix& m, const Triple& v) {
    Triple out{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) out[i] = f.add(out[i], f.mul(m[i][k], v[k]));
    return out;
}

Triple vec_mat(const FieldTable& f, const Triple& w, const Matrix& m) {
    Triple out{};
    for (int k = 0; k < 3; ++k)
        for (int t = 0; t < 3; ++t) out[k] = f.add(out[k], f.mul(w[t], m[t][k]));
    return out;
}

}  // namespace

PgIncidenceResult pg_incidence(int q) {
    if (q != 2 && q != 3 && q != 4) throw InvalidInput("pg_incidence: q must be 2, 3 or 4");
    FieldTable f;
    f.q = q;

    std::vector<Triple> classes;
    std::map<Triple, int> index;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                Triple v = normalize_projective(f, {a, b, c});
                if (index.emplace(v, static_cast<int>(classes.size())).second) classes.push_back(v);
            }
    int n = static_cast<int>(classes.size());
    if (n != q * q + q + 1) throw std::logic_error("pg_incidence: wrong projective point count");

    // lines reuse the same normal forms as dual coordinates
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int dot = 0;
            for (int t = 0; t < 3; ++t) dot = f.add(dot, f.mul(classes[j][t], classes[i][t]));
            if (dot == 0) edges.emplace_back(i, n + j);
        }
    Graph graph = Graph::from_edges(2 * n, edges);

    std::vector<std::pair<Matrix, Matrix>> mats;  // (M, M^-1)
    for (int lam = 1; lam < q; ++lam) {
        Matrix e12{{{1, lam, 0}, {0, 1, 0}, {0, 0, 1}}};
        Matrix e12i{{{1, f.neg(lam), 0}, {0, 1, 0}, {0, 0, 1}}};
        mats.emplace_back(e12, e12i);
    }
    Matrix cyc{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
    Matrix cyci{{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
    mats.emplace_back(cyc, cyci);

    std::vector<Permutation> gens;
    for (const auto& [m, mi] : mats) {
        std::vector<int> img(2 * n);
        for (int i = 0; i < n; ++i)
            img[i] = index.at(normalize_projective(f, mat_vec(f, m, classes[i])));
        for (int j = 0; j < n; ++j)
            img[n + j] = n + index.at(normalize_projective(f, vec_mat(f, classes[j], mi)));
        Permutation perm(std::move(img));
        if (!is_automorphism(graph, perm))
            throw std::logic_error("pg_incidence: generator is not an automorphism");
        gens.push_back(std::move(perm));
    }

    LabeledAction action{PermGroup::from_generators(gens), {}};
    action.labels.resize(2 * n);
    for (int i = 0; i < 2 * n; ++i) action.labels[i] = i;
    return {std::move(graph), std::move(action), n};
}

Graph foster_graph() { return read_graph_asset(std::string(GEOTRANS_DATA_DIR) + "/foster.json"); }

}  // namespace geotrans
