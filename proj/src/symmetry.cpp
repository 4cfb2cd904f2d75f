#include "geotrans/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "geotrans/construct.hpp"
#include "geotrans/errors.hpp"

namespace geotrans {

namespace {

long long tuple_budget(const Caps& caps, int level) {
    return std::max(1LL, caps.tuple_int_cap / (level + 1));
}

// t-arcs with first vertex u, in DFS order over sorted adjacency
std::vector<std::vector<int>> arcs_from(const Graph& g, int u, int t, long long max_tuples) {
    std::vector<std::vector<int>> out;
    std::vector<int> walk{u};
    auto descend = [&](auto&& self) -> void {
        if (static_cast<int>(walk.size()) == t + 1) {
            if (max_tuples >= 0 && static_cast<long long>(out.size()) >= max_tuples)
                throw CapExceeded("too many arcs from one root");
            out.push_back(walk);
            return;
        }
        int back = walk.size() >= 2 ? walk[walk.size() - 2] : -1;
        for (int w : g.neighbors(walk.back())) {
            if (w == back) continue;
            walk.push_back(w);
            self(self);
            walk.pop_back();
        }
    };
    descend(descend);
    return out;
}

void require_degree(const Graph& g, const PermGroup& action) {
    if (action.degree() != g.n())
        throw InvalidInput("action degree disagrees with the vertex count");
}

// stabilizer-transitivity on rooted t-arcs, one representative root per
// orbit of the action among the given roots
LevelVerdict rooted_level(const Graph& g, const PermGroup& action, const std::vector<int>& roots,
                          int t, const Caps& caps) {
    std::vector<char> wanted(g.n(), 0);
    for (int u : roots) {
        if (u < 0 || u >= g.n()) throw InvalidInput("root outside the vertex range");
        wanted[u] = 1;
    }
    LevelVerdict verdict{t, true, 0, {}, {}};
    for (const auto& orbit : action.orbits()) {
        int rep = -1;
        for (int v : orbit)
            if (wanted[v]) rep = rep == -1 ? v : std::min(rep, v);
        if (rep == -1) continue;
        auto tuples = arcs_from(g, rep, t, tuple_budget(caps, t));
        verdict.tuple_count += static_cast<long long>(tuples.size());
        if (tuples.empty()) continue;
        LevelVerdict local = one_orbit(action.point_stabilizer(rep), tuples, t);
        if (!local.transitive && verdict.transitive) {
            verdict.transitive = false;
            verdict.witness_a = std::move(local.witness_a);
            verdict.witness_b = std::move(local.witness_b);
        }
    }
    return verdict;
}

int longest_true_prefix(const std::vector<LevelVerdict>& levels) {
    int s = 0;
    for (const auto& v : levels) {
        if (!v.transitive) break;
        ++s;
    }
    return s;
}

}  // namespace

LevelVerdict one_orbit(const PermGroup& g, const std::vector<std::vector<int>>& tuples,
                       int level) {
    LevelVerdict verdict{level, true, static_cast<long long>(tuples.size()), {}, {}};
    if (tuples.empty()) return verdict;

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < tuples.size(); ++i)
        index.emplace(tuples[i], static_cast<int>(i));
    auto image_id = [&](const Permutation& p, const std::vector<int>& t) {
        auto it = index.find(apply_tuple(p, t));
        if (it == index.end())
            throw ActionNotClosed("a generator moves a tuple outside the checked set");
        return it->second;
    };

    std::vector<char> reached(tuples.size(), 0);
    std::vector<int> queue{0};
    reached[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& p : g.generators()) {
            int j = image_id(p, tuples[queue[head]]);
            if (!reached[j]) {
                reached[j] = 1;
                queue.push_back(j);
            }
        }
    }
    // closure of the unreached part too, so a non-automorphism cannot hide
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        if (reached[i]) continue;
        if (verdict.transitive) {
            verdict.transitive = false;
            verdict.witness_a = tuples[0];
            verdict.witness_b = tuples[i];
        }
        for (const auto& p : g.generators()) image_id(p, tuples[i]);
    }
    return verdict;
}

std::vector<LevelVerdict> check_s_arc_transitive(const Graph& g, const PermGroup& action, int s,
                                                 const Caps& caps) {
    require_degree(g, action);
    if (s < 1) throw InvalidInput("need s >= 1");
    std::vector<LevelVerdict> out;
    for (int t = 1; t <= s; ++t)
        out.push_back(one_orbit(action, s_arcs(g, t, tuple_budget(caps, t)), t));
    return out;
}

std::vector<LevelVerdict> check_s_geodesic_transitive(const Graph& g, const PermGroup& action,
                                                      int s, const Caps& caps) {
    require_degree(g, action);
    if (s < 1) throw InvalidInput("need s >= 1");
    std::vector<LevelVerdict> out;
    for (int t = 1; t <= s; ++t)
        out.push_back(one_orbit(action, s_geodesics(g, t, tuple_budget(caps, t)), t));
    return out;
}

std::vector<LevelVerdict> check_locally_s_arc_transitive(const Graph& g, const PermGroup& action,
                                                         int s, const Caps& caps) {
    require_degree(g, action);
    if (s < 1) throw InvalidInput("need s >= 1");
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    return check_rooted_s_arc_transitive(g, action, all, s, caps);
}

std::vector<LevelVerdict> check_rooted_s_arc_transitive(const Graph& g, const PermGroup& action,
                                                        const std::vector<int>& roots, int s,
                                                        const Caps& caps) {
    require_degree(g, action);
    if (s < 1) throw InvalidInput("need s >= 1");
    std::vector<LevelVerdict> out;
    for (int t = 1; t <= s; ++t) out.push_back(rooted_level(g, action, roots, t, caps));
    return out;
}

TransitivityReport transitivity_report(const Graph& g, const PermGroup& action, int max_s,
                                       const Caps& caps) {
    require_degree(g, action);
    if (max_s < 1) throw InvalidInput("need max_s >= 1");
    TransitivityReport report;
    report.vertex_transitive = g.n() > 0 && action.is_transitive();
    report.arcs = check_s_arc_transitive(g, action, max_s, caps);
    report.geodesics = check_s_geodesic_transitive(g, action, max_s, caps);
    report.local_arcs = check_locally_s_arc_transitive(g, action, max_s, caps);
    if (report.vertex_transitive) {
        report.max_arc_level = longest_true_prefix(report.arcs);
        report.max_geodesic_level = longest_true_prefix(report.geodesics);
    }
    report.max_local_level = longest_true_prefix(report.local_arcs);
    return report;
}

EquivalenceReport check_geodesic_incidence_equivalence(const Graph& g, const PermGroup& action,
                                                       const Caps& caps) {
    require_degree(g, action);
    EquivalenceReport report;
    auto f = f_membership(g);
    if (!f || f->first < 2) return report;  // needs at least two local cliques
    report.applicable = true;
    report.m = f->first;
    report.r = f->second;

    auto geo = check_s_geodesic_transitive(g, action, 2, caps);
    report.geodesic2 = action.is_transitive() && geo[0].transitive && geo[1].transitive;

    auto inc = incidence_graph(g);
    PermGroup extended = incidence_action(action, inc.structure.lines);
    std::vector<int> points(g.n());
    std::iota(points.begin(), points.end(), 0);
    std::vector<int> lines(inc.structure.lines.size());
    std::iota(lines.begin(), lines.end(), g.n());

    auto all_true = [](const std::vector<LevelVerdict>& levels) {
        return std::all_of(levels.begin(), levels.end(),
                           [](const LevelVerdict& v) { return v.transitive; });
    };
    report.point4 = all_true(check_rooted_s_arc_transitive(inc.graph, extended, points, 4, caps));
    report.local3 = all_true(check_locally_s_arc_transitive(inc.graph, extended, 3, caps));
    report.line1 = all_true(check_rooted_s_arc_transitive(inc.graph, extended, lines, 1, caps));
    report.point4_local3 = report.point4 && report.local3;
    report.point4_line1 = report.point4 && report.line1;
    report.consistent = report.geodesic2 == report.point4_local3 &&
                        report.geodesic2 == report.point4_line1;
    return report;
}

}  // namespace geotrans
