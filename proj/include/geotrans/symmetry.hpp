#ifndef GEOTRANS_SYMMETRY_HPP
#define GEOTRANS_SYMMETRY_HPP

#include <vector>

#include "geotrans/graph.hpp"
#include "geotrans/perm_group.hpp"

namespace geotrans {

// Answer to one transitivity question at one level. When the answer is no,
// witness_a and witness_b hold two tuples no group element connects.
struct LevelVerdict {
    int level = 0;
    bool transitive = false;
    long long tuple_count = 0;
    std::vector<int> witness_a;
    std::vector<int> witness_b;
};

// Does the group have a single orbit on the tuples (acting entrywise)? The
// tuple list must be closed under every generator; a generator stepping
// outside it throws ActionNotClosed, which is also how a non-automorphism
// betrays itself when the tuples are arcs or geodesics.
LevelVerdict one_orbit(const PermGroup& g, const std::vector<std::vector<int>>& tuples,
                       int level);

// per-level verdicts for t = 1..s; transitive on t-arcs at each level
std::vector<LevelVerdict> check_s_arc_transitive(const Graph& g, const PermGroup& action, int s,
                                                 const Caps& caps = {});
// per-level verdicts on t-geodesics; level 1 is plain arc transitivity
std::vector<LevelVerdict> check_s_geodesic_transitive(const Graph& g, const PermGroup& action,
                                                      int s, const Caps& caps = {});

// Locally (G,s)-arc transitive: for every vertex u and every t <= s, the
// stabilizer of u has one orbit on the t-arcs starting at u. Checked on one
// representative per vertex orbit; witnesses share their first vertex.
std::vector<LevelVerdict> check_locally_s_arc_transitive(const Graph& g, const PermGroup& action,
                                                         int s, const Caps& caps = {});

// the same stabilizer condition with roots restricted to the given set, as
// needed for the point- and line-rooted conditions on incidence graphs
std::vector<LevelVerdict> check_rooted_s_arc_transitive(const Graph& g, const PermGroup& action,
                                                        const std::vector<int>& roots, int s,
                                                        const Caps& caps = {});

struct TransitivityReport {
    bool vertex_transitive = false;
    std::vector<LevelVerdict> arcs;
    std::vector<LevelVerdict> geodesics;
    std::vector<LevelVerdict> local_arcs;
    // the largest s with vertex transitivity and all levels 1..s true
    int max_arc_level = 0;
    int max_geodesic_level = 0;
    // the largest s with all local levels 1..s true (no vertex transitivity
    // requirement)
    int max_local_level = 0;
};

TransitivityReport transitivity_report(const Graph& g, const PermGroup& action, int max_s,
                                       const Caps& caps = {});

// The three conditions that are equivalent for a connected graph that is
// locally mK_r with m >= 2: 2-geodesic transitivity of the graph, and two
// transitivity packages on its point-clique incidence graph. Inapplicable
// graphs (not locally mK_r, or m < 2) report applicable = false and are
// vacuously consistent.
struct EquivalenceReport {
    bool applicable = false;
    int m = 0;
    int r = 0;
    bool geodesic2 = false;      // vertex + 1,2-geodesic transitive
    bool point4 = false;         // point-rooted 4-arc condition
    bool local3 = false;         // locally 3-arc transitive
    bool line1 = false;          // line-rooted 1-arc condition
    bool point4_local3 = false;  // second clause
    bool point4_line1 = false;   // third clause
    bool consistent = true;      // all three clauses agree
};

EquivalenceReport check_geodesic_incidence_equivalence(const Graph& g, const PermGroup& action,
                                                       const Caps& caps = {});

}  // namespace geotrans

#endif
