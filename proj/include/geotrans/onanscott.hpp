#ifndef GEOTRANS_ONANSCOTT_HPP
#define GEOTRANS_ONANSCOTT_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "geotrans/graph.hpp"
#include "geotrans/perm_group.hpp"

namespace geotrans {

// the eight quasiprimitive types, plus the two ways out
enum class QPType {
    HA,  // affine: elementary abelian regular socle
    HS,  // holomorph of a simple group
    HC,  // holomorph of a compound group
    AS,  // almost simple
    TW,  // twisted wreath: nonabelian regular socle with >= 2 factors
    SD,  // simple diagonal
    CD,  // compound diagonal
    PA,  // product action
    NotQuasiprimitive,
    Unresolved,
};

const char* to_string(QPType t);

struct TypeVerdict {
    QPType type = QPType::Unresolved;
    bool primitive = false;
    bool quasiprimitive = false;
    int minimal_normal_count = 0;
    mpz_class socle_order = 1;
    bool socle_abelian = false;
    bool socle_regular = false;
    // simple-factor data of the unique minimal normal subgroup, when probed
    int socle_factor_count = 0;
    mpz_class socle_factor_order = 1;
    std::string note;  // why a verdict came out Unresolved
};

// transitive with no nontrivial block system
bool is_primitive(const PermGroup& G);

// every minimal normal subgroup is transitive
bool is_quasiprimitive(const PermGroup& G, const Caps& caps = {});

// Decide the quasiprimitive type of a transitive group by the shape of its
// socle and the point-stabilizer projections onto the simple factors.
// Throws NotTransitive for intransitive input; caps propagate CapExceeded.
TypeVerdict classify_action(const PermGroup& G, const Caps& caps = {});

struct SocleProbe {
    int factor_count = 0;
    mpz_class factor_order = 1;
    std::vector<PermGroup> factors;
};

// splits a nonabelian direct power T^k into its simple factors, which are
// exactly its own minimal normal subgroups
SocleProbe socle_factor_probe(const PermGroup& N, const Caps& caps = {});

struct CliqueTypeReport {
    TypeVerdict vertex;
    TypeVerdict clique;
    long long socle_clique_orbits = 0;
};

// classifies the action on vertices and the induced action on maximal
// cliques; the graph must be locally a union of equal cliques (NotInF)
CliqueTypeReport check_clique_action_type(const Graph& g, const PermGroup& G,
                                          const Caps& caps = {});

}  // namespace geotrans

#endif
