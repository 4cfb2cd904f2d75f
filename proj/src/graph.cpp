#include "geotrans/graph.hpp"

#include <algorithm>
#include <cstdint>

#include "geotrans/errors.hpp"

namespace geotrans {

namespace {

void check_vertex(const Graph& g, int u, const char* what) {
    if (u < 0 || u >= g.n()) throw InvalidInput(std::string(what) + ": vertex out of range");
}

// fixed-width bitset rows for the clique search
struct Words {
    std::vector<std::uint64_t> w;
    explicit Words(int bits = 0) : w((bits + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
};

Words and_words(const Words& a, const Words& b) {
    Words out;
    out.w.resize(a.w.size());
    for (std::size_t i = 0; i < a.w.size(); ++i) out.w[i] = a.w[i] & b.w[i];
    return out;
}

int count_and(const Words& a, const Words& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.w.size(); ++i) c += __builtin_popcountll(a.w[i] & b.w[i]);
    return c;
}

void bron_kerbosch(const std::vector<Words>& nbr, std::vector<int>& r, Words p, Words x,
                   std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // pivot on the vertex covering most of p, from p or x
    int pivot = -1, best = -1;
    for (std::size_t wi = 0; wi < p.w.size(); ++wi) {
        std::uint64_t both = p.w[wi] | x.w[wi];
        while (both) {
            int v = static_cast<int>(wi * 64 + __builtin_ctzll(both));
            both &= both - 1;
            int c = count_and(p, nbr[v]);
            if (c > best) {
                best = c;
                pivot = v;
            }
        }
    }
    for (std::size_t wi = 0; wi < p.w.size(); ++wi) {
        std::uint64_t cand = p.w[wi] & ~nbr[pivot].w[wi];
        while (cand) {
            int v = static_cast<int>(wi * 64 + __builtin_ctzll(cand));
            cand &= cand - 1;
            r.push_back(v);
            bron_kerbosch(nbr, r, and_words(p, nbr[v]), and_words(x, nbr[v]), out);
            r.pop_back();
            p.w[v >> 6] &= ~(1ull << (v & 63));
            x.set(v);
            cand &= p.w[wi];
        }
    }
}

}  // namespace

Graph::Graph(int n) {
    if (n < 0) throw InvalidInput("negative vertex count");
    adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidInput("edge endpoint out of range");
        if (u == v) throw InvalidInput("loops are not allowed");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& lst : g.adj_) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    return g;
}

const std::vector<int>& Graph::neighbors(int u) const {
    check_vertex(*this, u, "neighbors");
    return adj_[u];
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(*this, u, "adjacent");
    check_vertex(*this, v, "adjacent");
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::valency(int u) const {
    check_vertex(*this, u, "valency");
    return static_cast<int>(adj_[u].size());
}

std::optional<int> Graph::regular_valency() const {
    if (n() == 0) return std::nullopt;
    int d = static_cast<int>(adj_[0].size());
    for (const auto& lst : adj_)
        if (static_cast<int>(lst.size()) != d) return std::nullopt;
    return d;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& lst : adj_) twice += static_cast<long long>(lst.size());
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> distances_from(const Graph& g, int u) {
    check_vertex(g, u, "distances_from");
    std::vector<int> dist(g.n(), kUnreachable);
    std::vector<int> queue{u};
    dist[u] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    auto dist = distances_from(g, 0);
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(g.n(), 0);
    for (int u = 0; u < g.n(); ++u) {
        if (seen[u]) continue;
        std::vector<int> comp{u};
        seen[u] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

int diameter(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.n(); ++u) {
        for (int d : distances_from(g, u)) {
            if (d == kUnreachable) return kUnreachable;
            best = std::max(best, d);
        }
    }
    return best;
}

int girth(const Graph& g) {
    int best = kUnreachable;
    std::vector<int> dist(g.n()), parent(g.n());
    for (int root = 0; root < g.n(); ++root) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::vector<int> queue{root};
        dist[root] = 0;
        parent[root] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            if (best != kUnreachable && 2 * dist[v] >= best) break;
            for (int w : g.neighbors(v)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == kUnreachable || len < best) best = len;
                }
            }
        }
    }
    return best;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> back(g.n(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(g, vertices[i], "induced_subgraph");
        if (back[vertices[i]] >= 0) throw InvalidInput("induced_subgraph: repeated vertex");
        back[vertices[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i]))
            if (back[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), back[w]);
    return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    std::vector<int> side(g.n(), -1);
    for (int root = 0; root < g.n(); ++root) {
        if (side[root] >= 0) continue;
        // the least vertex of each component lands in the first side
        side[root] = 0;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int v = 0; v < g.n(); ++v) (side[v] == 0 ? out.first : out.second).push_back(v);
    return out;
}

namespace {

void check_tuple_budget(std::size_t have, long long max_tuples) {
    if (max_tuples >= 0 && static_cast<long long>(have) > max_tuples)
        throw CapExceeded("tuple enumeration exceeds the configured cap");
}

}  // namespace

std::vector<std::vector<int>> s_arcs(const Graph& g, int s, long long max_tuples) {
    if (s < 1) throw InvalidInput("s_arcs needs s >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> walk;
    // depth first over walks that never reverse the previous step
    auto extend = [&](auto&& self, int v) -> void {
        walk.push_back(v);
        if (static_cast<int>(walk.size()) == s + 1) {
            out.push_back(walk);
            check_tuple_budget(out.size(), max_tuples);
        } else {
            int prev = walk.size() >= 2 ? walk[walk.size() - 2] : -1;
            for (int w : g.neighbors(v))
                if (w != prev) self(self, w);
        }
        walk.pop_back();
    };
    for (int u = 0; u < g.n(); ++u) extend(extend, u);
    return out;
}

std::vector<std::vector<int>> s_geodesics_from(const Graph& g, int u, int s,
                                               long long max_tuples) {
    if (s < 1) throw InvalidInput("s_geodesics needs s >= 1");
    check_vertex(g, u, "s_geodesics_from");
    auto dist = distances_from(g, u);
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    auto extend = [&](auto&& self, int v) -> void {
        path.push_back(v);
        if (static_cast<int>(path.size()) == s + 1) {
            out.push_back(path);
            check_tuple_budget(out.size(), max_tuples);
        } else {
            int next_d = static_cast<int>(path.size());
            for (int w : g.neighbors(v))
                if (dist[w] == next_d) self(self, w);
        }
        path.pop_back();
    };
    extend(extend, u);
    return out;
}

std::vector<std::vector<int>> s_geodesics(const Graph& g, int s, long long max_tuples) {
    std::vector<std::vector<int>> out;
    for (int u = 0; u < g.n(); ++u) {
        auto part = s_geodesics_from(g, u, s, max_tuples);
        check_tuple_budget(out.size() + part.size(), max_tuples);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<std::vector<int>> two_geodesics(const Graph& g, long long max_tuples) {
    std::vector<std::vector<int>> out;
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.neighbors(v))
            for (int w : g.neighbors(v)) {
                if (u == w || g.adjacent(u, w)) continue;
                out.push_back({u, v, w});
                check_tuple_budget(out.size(), max_tuples);
            }
    return out;
}

Graph local_subgraph(const Graph& g, int u) {
    check_vertex(g, u, "local_subgraph");
    return induced_subgraph(g, g.neighbors(u));
}

LocalShape classify_local(const Graph& g, int u) {
    Graph local = local_subgraph(g, u);
    LocalShape shape;
    if (local.n() == 0) return shape;  // isolated vertex: Other with m = 0

    auto comps = connected_components(local);
    bool disjoint_cliques = true;
    std::size_t size = comps[0].size();
    for (const auto& comp : comps) {
        if (comp.size() != size) {
            disjoint_cliques = false;
            break;
        }
        for (int v : comp)
            if (local.valency(v) != static_cast<int>(comp.size()) - 1) {
                disjoint_cliques = false;
                break;
            }
        if (!disjoint_cliques) break;
    }
    if (disjoint_cliques) {
        shape.kind = LocalShape::Kind::mKr;
        shape.m = static_cast<int>(comps.size());
        shape.r = static_cast<int>(size);
        return shape;
    }
    if (comps.size() == 1 && diameter(local) == 2) {
        shape.kind = LocalShape::Kind::ConnectedDiam2;
        return shape;
    }
    return shape;
}

std::optional<std::pair<int, int>> f_membership(const Graph& g) {
    if (g.n() == 0 || !is_connected(g)) return std::nullopt;
    LocalShape first = classify_local(g, 0);
    if (first.kind != LocalShape::Kind::mKr) return std::nullopt;
    for (int u = 1; u < g.n(); ++u)
        if (classify_local(g, u) != first) return std::nullopt;
    return std::make_pair(first.m, first.r);
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    if (g.n() == 0) return {};
    std::vector<Words> nbr(g.n(), Words(g.n()));
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u)) nbr[u].set(v);
    Words p(g.n()), x(g.n());
    for (int u = 0; u < g.n(); ++u) p.set(u);
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    bron_kerbosch(nbr, r, p, x, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u) {
        const auto& lst = g.neighbors(u);
        std::size_t at = 0;
        for (int v = u + 1; v < g.n(); ++v) {
            while (at < lst.size() && lst[at] < v) ++at;
            if (at < lst.size() && lst[at] == v) continue;
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(g.n(), edges);
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.degree() != g.n()) throw InvalidInput("automorphism check: degree mismatch");
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (!g.adjacent(p[u], p[v])) return false;
    return true;
}

}  // namespace geotrans
