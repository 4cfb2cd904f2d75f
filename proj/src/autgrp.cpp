#include "geotrans/autgrp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "geotrans/errors.hpp"

namespace geotrans {

namespace {

void validate_partition(const Graph& g, const ColoredPartition& partition) {
    std::vector<char> seen(g.n(), 0);
    int total = 0;
    for (const auto& cell : partition) {
        if (cell.empty()) throw InvalidInput("partition has an empty cell");
        for (int v : cell) {
            if (v < 0 || v >= g.n() || seen[v])
                throw InvalidInput("partition is not a partition of the vertex set");
            seen[v] = 1;
            ++total;
        }
    }
    if (total != g.n()) throw InvalidInput("partition misses some vertices");
}

ColoredPartition sorted_cells(ColoredPartition partition) {
    for (auto& cell : partition) std::sort(cell.begin(), cell.end());
    return partition;
}

ColoredPartition refine_impl(const Graph& g, ColoredPartition cells) {
    std::deque<std::vector<int>> work(cells.begin(), cells.end());
    std::vector<int> cnt(g.n(), 0);
    while (!work.empty()) {
        std::vector<int> splitter = std::move(work.front());
        work.pop_front();
        std::fill(cnt.begin(), cnt.end(), 0);
        for (int u : splitter)
            for (int w : g.neighbors(u)) ++cnt[w];
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            if (cells[ci].size() <= 1) continue;
            std::map<int, std::vector<int>> parts;
            for (int v : cells[ci]) parts[cnt[v]].push_back(v);
            if (parts.size() <= 1) continue;
            // the cell splits; parts take its place in ascending count order
            std::vector<std::vector<int>> pieces;
            for (auto& [c, vs] : parts) pieces.push_back(std::move(vs));
            cells[ci] = pieces[0];
            cells.insert(cells.begin() + ci + 1, pieces.begin() + 1, pieces.end());
            for (auto& piece : pieces) work.push_back(std::move(piece));
        }
    }
    return cells;
}

// label-invariant summary of an equitable partition: the cell sizes followed
// by the quotient matrix row of each cell's first vertex
std::vector<int> partition_invariant(const Graph& g, const ColoredPartition& cells) {
    std::vector<int> cell_of(g.n(), -1);
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (int v : cells[i]) cell_of[v] = static_cast<int>(i);
    std::vector<int> inv;
    inv.reserve(cells.size() * (cells.size() + 1) + 1);
    inv.push_back(static_cast<int>(cells.size()));
    for (const auto& cell : cells) inv.push_back(static_cast<int>(cell.size()));
    std::vector<int> row(cells.size());
    for (const auto& cell : cells) {
        std::fill(row.begin(), row.end(), 0);
        for (int w : g.neighbors(cell[0])) ++row[cell_of[w]];
        inv.insert(inv.end(), row.begin(), row.end());
    }
    return inv;
}

// index of the first smallest cell with at least two vertices, or -1
int target_cell(const ColoredPartition& cells) {
    int best = -1;
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::size_t s = cells[i].size();
        if (s >= 2 && (best < 0 || s < best_size)) {
            best = static_cast<int>(i);
            best_size = s;
        }
    }
    return best;
}

ColoredPartition individualize_and_refine(const Graph& g, const ColoredPartition& cells,
                                          int cell_index, int v) {
    ColoredPartition next;
    next.reserve(cells.size() + 1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(i) != cell_index) {
            next.push_back(cells[i]);
            continue;
        }
        next.push_back({v});
        std::vector<int> rest;
        for (int w : cells[i])
            if (w != v) rest.push_back(w);
        next.push_back(std::move(rest));
    }
    return refine_impl(g, std::move(next));
}

struct AutSearch {
    const Graph& g;
    std::vector<Permutation> gens;
    PermGroup group;
    std::vector<std::vector<int>> base_invariants;  // indexed by depth
    std::vector<int> base_prefix;                   // individualized vertices on the first path
    std::vector<int> base_leaf;                     // vertex order of the first discrete partition
    int base_depth = -1;

    explicit AutSearch(const Graph& graph) : g(graph), group(PermGroup::trivial(graph.n())) {}

    static std::vector<int> leaf_sequence(const ColoredPartition& cells) {
        std::vector<int> seq;
        seq.reserve(cells.size());
        for (const auto& cell : cells) seq.push_back(cell[0]);
        return seq;
    }

    bool discrete(const ColoredPartition& cells) const {
        return static_cast<int>(cells.size()) == g.n();
    }

    // merge the orbits of every found generator that fixes the whole base
    // prefix above the current node; candidates sharing an orbit with an
    // already explored one lead to mirrored subtrees
    std::vector<int> prefix_stabilizer_orbits() const {
        std::vector<int> parent(g.n());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&parent](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (const auto& p : gens) {
            bool fixes = true;
            for (int b : base_prefix)
                if (p[b] != b) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < g.n(); ++v) {
                int a = find(v), b = find(p[v]);
                if (a != b) parent[a] = b;
            }
        }
        for (int v = 0; v < g.n(); ++v) parent[v] = find(v);
        return parent;
    }

    // returns whether the leaf really encodes an automorphism; new ones are
    // added to the generating set
    bool try_leaf(const std::vector<int>& leaf) {
        std::vector<int> img(g.n());
        for (std::size_t i = 0; i < leaf.size(); ++i) img[base_leaf[i]] = leaf[i];
        Permutation p(std::move(img));
        if (!is_automorphism(g, p)) return false;
        if (!group.contains(p)) {
            gens.push_back(std::move(p));
            group = PermGroup::from_generators(gens);
        }
        return true;
    }

    // first path: always individualize the first vertex of the target cell,
    // then sweep the remaining candidates of each node bottom-up
    void descend_base(const ColoredPartition& cells, int depth) {
        base_invariants.push_back(partition_invariant(g, cells));
        if (discrete(cells)) {
            base_leaf = leaf_sequence(cells);
            base_depth = depth;
            return;
        }
        int t = target_cell(cells);
        const std::vector<int> candidates = cells[t];

        base_prefix.push_back(candidates[0]);
        descend_base(individualize_and_refine(g, cells, t, candidates[0]), depth + 1);
        base_prefix.pop_back();

        std::vector<int> explored{candidates[0]};
        for (std::size_t ci = 1; ci < candidates.size(); ++ci) {
            int c = candidates[ci];
            auto root = prefix_stabilizer_orbits();
            bool skip = false;
            for (int e : explored)
                if (root[e] == root[c]) {
                    skip = true;
                    break;
                }
            explored.push_back(c);
            if (skip) continue;
            explore(individualize_and_refine(g, cells, t, c), depth + 1);
        }
    }

    // away from the first path only one automorphism per subtree is needed
    bool explore(const ColoredPartition& cells, int depth) {
        if (depth >= static_cast<int>(base_invariants.size()) ||
            partition_invariant(g, cells) != base_invariants[depth])
            return false;
        if (discrete(cells)) return try_leaf(leaf_sequence(cells));
        int t = target_cell(cells);
        for (int c : cells[t])
            if (explore(individualize_and_refine(g, cells, t, c), depth + 1)) return true;
        return false;
    }
};

bool connected_isomorphic(const Graph& a, const Graph& b, const Caps& caps) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    if (a.n() == 0) return true;
    auto degrees = [](const Graph& g) {
        std::vector<int> d;
        for (int u = 0; u < g.n(); ++u) d.push_back(g.valency(u));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b)) return false;

    // automorphisms of the disjoint union cross sides exactly when the
    // connected halves are isomorphic
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
    Graph both = Graph::from_edges(a.n() + b.n(), edges);
    PermGroup aut = automorphism_group(both, caps);
    for (int v : aut.orbit(0))
        if (v >= a.n()) return true;
    return false;
}

}  // namespace

ColoredPartition refine(const Graph& g, const ColoredPartition& partition) {
    validate_partition(g, partition);
    return refine_impl(g, sorted_cells(partition));
}

PermGroup automorphism_group(const Graph& g, const Caps& caps) {
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    return automorphism_group(g, {all}, caps);
}

PermGroup automorphism_group(const Graph& g, const ColoredPartition& initial,
                             const Caps& caps) {
    if (g.n() == 0) throw InvalidInput("automorphism group of the empty graph");
    if (g.n() > caps.aut_vertex_cap)
        throw CapExceeded("graph exceeds the automorphism search vertex cap");
    validate_partition(g, initial);

    AutSearch search(g);
    search.descend_base(refine_impl(g, sorted_cells(initial)), 0);
    if (search.gens.empty()) return PermGroup::trivial(g.n());
    return PermGroup::from_generators(search.gens);
}

bool is_isomorphic(const Graph& a, const Graph& b, const Caps& caps) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    if (a.n() == 0) return true;

    auto comps_a = connected_components(a);
    auto comps_b = connected_components(b);
    if (comps_a.size() != comps_b.size()) return false;
    if (comps_a.size() == 1) return connected_isomorphic(a, b, caps);

    // bucket components by cheap invariants, then match within buckets by
    // isomorphism classes
    auto key_of = [](const Graph& comp) {
        std::vector<int> d;
        for (int u = 0; u < comp.n(); ++u) d.push_back(comp.valency(u));
        std::sort(d.begin(), d.end());
        return std::make_pair(comp.n(), d);
    };
    using Key = std::pair<int, std::vector<int>>;
    std::map<Key, std::vector<Graph>> side_a, side_b;
    for (const auto& c : comps_a) {
        Graph sub = induced_subgraph(a, c);
        side_a[key_of(sub)].push_back(std::move(sub));
    }
    for (const auto& c : comps_b) {
        Graph sub = induced_subgraph(b, c);
        side_b[key_of(sub)].push_back(std::move(sub));
    }
    if (side_a.size() != side_b.size()) return false;
    for (auto& [key, list_a] : side_a) {
        auto it = side_b.find(key);
        if (it == side_b.end() || it->second.size() != list_a.size()) return false;
        auto& list_b = it->second;
        // group both lists into isomorphism classes against representatives
        // drawn from the first list; the class sizes must agree side by side
        std::vector<Graph> reps;
        std::vector<int> count_a, count_b;
        for (const auto& comp : list_a) {
            bool placed = false;
            for (std::size_t r = 0; r < reps.size() && !placed; ++r)
                if (connected_isomorphic(comp, reps[r], caps)) {
                    ++count_a[r];
                    placed = true;
                }
            if (!placed) {
                reps.push_back(comp);
                count_a.push_back(1);
                count_b.push_back(0);
            }
        }
        for (const auto& comp : list_b) {
            bool placed = false;
            for (std::size_t r = 0; r < reps.size() && !placed; ++r)
                if (connected_isomorphic(comp, reps[r], caps)) {
                    ++count_b[r];
                    placed = true;
                }
            if (!placed) return false;
        }
        if (count_a != count_b) return false;
    }
    return true;
}

}  // namespace geotrans
