#include "geotrans/onanscott.hpp"

#include <algorithm>

#include "geotrans/construct.hpp"
#include "geotrans/errors.hpp"

namespace geotrans {

const char* to_string(QPType t) {
    switch (t) {
        case QPType::HA: return "HA";
        case QPType::HS: return "HS";
        case QPType::HC: return "HC";
        case QPType::AS: return "AS";
        case QPType::TW: return "TW";
        case QPType::SD: return "SD";
        case QPType::CD: return "CD";
        case QPType::PA: return "PA";
        case QPType::NotQuasiprimitive: return "NotQuasiprimitive";
        case QPType::Unresolved: return "Unresolved";
    }
    return "Unresolved";
}

bool is_primitive(const PermGroup& G) { return G.blocks().primitive; }

bool is_quasiprimitive(const PermGroup& G, const Caps& caps) {
    if (!G.is_transitive()) throw NotTransitive("quasiprimitivity is asked of transitive groups");
    auto mins = G.minimal_normal_subgroups(caps);
    return std::all_of(mins.begin(), mins.end(),
                       [](const PermGroup& n) { return n.is_transitive(); });
}

SocleProbe socle_factor_probe(const PermGroup& N, const Caps& caps) {
    if (N.is_abelian()) throw InvalidInput("socle_factor_probe: expects a nonabelian group");
    SocleProbe probe;
    probe.factors = N.minimal_normal_subgroups(caps);
    probe.factor_count = static_cast<int>(probe.factors.size());
    if (probe.factor_count == 0) throw InvalidInput("socle_factor_probe: no minimal normal subgroups");
    probe.factor_order = probe.factors[0].order();
    mpz_class product = 1;
    for (const auto& f : probe.factors) {
        if (f.order() != probe.factor_order)
            throw InvalidInput("socle_factor_probe: factors of unequal order");
        product *= f.order();
    }
    if (product != N.order())
        throw InvalidInput("socle_factor_probe: not a direct product of its minimal normals");
    return probe;
}

namespace {

PermGroup socle_from(const std::vector<PermGroup>& mins, int degree) {
    std::vector<Permutation> gens;
    for (const auto& n : mins)
        for (const auto& g : n.generators()) gens.push_back(g);
    if (gens.empty()) return PermGroup::trivial(degree);
    return PermGroup::from_generators(std::move(gens));
}

// |pi_i(N_alpha)| where pi_i kills every factor except the i-th: the kernel
// of pi_i restricted to N_alpha is the point stabilizer of the product of
// the other factors
mpz_class stabilizer_projection_order(const PermGroup& N_alpha, const SocleProbe& probe, int i,
                                      int alpha) {
    std::vector<Permutation> others;
    for (int j = 0; j < probe.factor_count; ++j) {
        if (j == i) continue;
        for (const auto& p : probe.factors[j].generators()) others.push_back(p);
    }
    PermGroup C = others.empty() ? PermGroup::trivial(N_alpha.degree())
                                 : PermGroup::from_generators(others);
    mpz_class kernel_order = C.point_stabilizer(alpha).order();
    mpz_class q = N_alpha.order() / kernel_order;
    if (q * kernel_order != N_alpha.order())
        throw std::logic_error("projection order does not divide the stabilizer order");
    return q;
}

// one minimal-normal-subgroup computation serves the verdict and, when the
// caller wants it, the socle
TypeVerdict classify_core(const PermGroup& G, const Caps& caps, PermGroup* socle_out) {
    if (!G.is_transitive()) throw NotTransitive("classification is asked of transitive groups");
    TypeVerdict v;
    v.primitive = is_primitive(G);

    auto mins = G.minimal_normal_subgroups(caps);
    v.minimal_normal_count = static_cast<int>(mins.size());
    if (socle_out) *socle_out = socle_from(mins, G.degree());
    if (mins.empty()) {
        v.quasiprimitive = true;  // the trivial group on one point, vacuously
        v.note = "no minimal normal subgroups (trivial group)";
        return v;
    }
    v.quasiprimitive = std::all_of(mins.begin(), mins.end(),
                                   [](const PermGroup& n) { return n.is_transitive(); });
    if (!v.quasiprimitive) {
        v.type = QPType::NotQuasiprimitive;
        return v;
    }

    PermGroup socle = socle_from(mins, G.degree());
    v.socle_order = socle.order();
    v.socle_abelian = socle.is_abelian();
    v.socle_regular = socle.order() == static_cast<unsigned long>(G.degree());

    if (mins.size() > 2) {
        v.note = "more than two minimal normal subgroups";
        return v;
    }

    if (mins.size() == 2) {
        // two distinct minimal normals centralize each other; in the
        // quasiprimitive case both are nonabelian and regular
        bool regular0 = mins[0].order() == static_cast<unsigned long>(G.degree());
        bool regular1 = mins[1].order() == static_cast<unsigned long>(G.degree());
        if (mins[0].is_abelian() || mins[1].is_abelian() || !regular0 || !regular1) {
            v.note = "two minimal normals but not both nonabelian regular";
            return v;
        }
        v.type = mins[0].is_simple(caps) && mins[1].is_simple(caps) ? QPType::HS : QPType::HC;
        return v;
    }

    const PermGroup& N = mins[0];
    if (N.is_abelian()) {
        bool regular = N.order() == static_cast<unsigned long>(G.degree());
        if (N.is_elementary_abelian() && regular) {
            v.type = QPType::HA;
        } else {
            v.note = "abelian minimal normal subgroup that is not elementary abelian regular";
        }
        return v;
    }

    SocleProbe probe = socle_factor_probe(N, caps);
    v.socle_factor_count = probe.factor_count;
    v.socle_factor_order = probe.factor_order;
    if (probe.factor_count == 1) {
        v.type = QPType::AS;
        return v;
    }
    if (N.order() == static_cast<unsigned long>(G.degree())) {
        v.type = QPType::TW;
        return v;
    }

    constexpr int alpha = 0;
    PermGroup N_alpha = N.point_stabilizer(alpha);
    int full = 0, proper_nontrivial = 0;
    for (int i = 0; i < probe.factor_count; ++i) {
        mpz_class proj = stabilizer_projection_order(N_alpha, probe, i, alpha);
        if (proj == probe.factor_order)
            ++full;
        else if (proj > 1)
            ++proper_nontrivial;
    }
    if (full == probe.factor_count) {
        // N_alpha is a product of j full diagonal subgroups
        mpz_class rest = N_alpha.order();
        int j = 0;
        while (rest > 1 && rest % probe.factor_order == 0) {
            rest /= probe.factor_order;
            ++j;
        }
        if (rest != 1) {
            v.note = "full projections but the stabilizer is not a power of the factor order";
            return v;
        }
        if (j == 1)
            v.type = QPType::SD;
        else if (j > 1 && j < probe.factor_count)
            v.type = QPType::CD;
        else
            v.note = "full projections with an out-of-range diagonal count";
        return v;
    }
    if (proper_nontrivial == probe.factor_count) {
        v.type = QPType::PA;
        return v;
    }
    v.note = "mixed stabilizer projections";
    return v;
}

}  // namespace

TypeVerdict classify_action(const PermGroup& G, const Caps& caps) {
    return classify_core(G, caps, nullptr);
}

CliqueTypeReport check_clique_action_type(const Graph& g, const PermGroup& G, const Caps& caps) {
    if (!f_membership(g))
        throw NotInF("clique action types are asked of graphs that are locally a union of equal cliques");
    CliqueTypeReport report;
    PermGroup socle = PermGroup::trivial(G.degree());
    report.vertex = classify_core(G, caps, &socle);

    auto cg = clique_graph(g);
    PermGroup on_cliques = clique_action(G, cg.cliques);
    report.clique = classify_action(on_cliques, caps);

    PermGroup socle_on_cliques = clique_action(socle, cg.cliques);
    report.socle_clique_orbits = static_cast<long long>(socle_on_cliques.orbits().size());
    return report;
}

}  // namespace geotrans
