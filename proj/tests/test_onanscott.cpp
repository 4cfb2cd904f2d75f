#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "geotrans/autgrp.hpp"
#include "geotrans/construct.hpp"
#include "geotrans/errors.hpp"
#include "geotrans/onanscott.hpp"
#include "oracles.hpp"

using namespace geotrans;

namespace {

// left and right regular representations of a listed group on itself
struct RegularPair {
    std::vector<Permutation> left;
    std::vector<Permutation> right;
    Permutation inversion;
    int degree = 0;
};

RegularPair regular_representations(const std::vector<Permutation>& gens) {
    auto els = oracles::closure(gens);
    std::sort(els.begin(), els.end());
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < els.size(); ++i) index[els[i]] = static_cast<int>(i);

    RegularPair out;
    out.degree = static_cast<int>(els.size());
    for (const auto& g : gens) {
        std::vector<int> l(els.size()), r(els.size());
        for (std::size_t i = 0; i < els.size(); ++i) {
            l[i] = index.at(compose(g, els[i]));
            r[i] = index.at(compose(els[i], g));
        }
        out.left.emplace_back(std::move(l));
        out.right.emplace_back(std::move(r));
    }
    std::vector<int> inv(els.size());
    for (std::size_t i = 0; i < els.size(); ++i) inv[i] = index.at(els[i].inverse());
    out.inversion = Permutation(std::move(inv));
    return out;
}

Permutation shift_labels(const Permutation& p, int offset, int degree) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    for (int i = 0; i < p.degree(); ++i) img[i + offset] = p[i] + offset;
    return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("primitivity and quasiprimitivity basics") {
    CHECK(is_primitive(sym(5)));
    CHECK(is_primitive(alt(5)));
    CHECK(is_quasiprimitive(sym(5)));

    PermGroup c4 = PermGroup::from_generators({Permutation::from_cycles(4, {{0, 1, 2, 3}})});
    CHECK_FALSE(is_primitive(c4));
    CHECK_FALSE(is_quasiprimitive(c4));

    PermGroup c5 = PermGroup::from_generators({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
    CHECK(is_primitive(c5));
    CHECK(is_quasiprimitive(c5));

    PermGroup flip = PermGroup::from_generators({Permutation::from_cycles(4, {{0, 1}})});
    CHECK_THROWS_AS(is_quasiprimitive(flip), NotTransitive);
    CHECK_THROWS_AS(classify_action(flip), NotTransitive);
}

TEST_CASE("prime cycles and affine groups classify as HA") {
    PermGroup c5 = PermGroup::from_generators({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
    auto v = classify_action(c5);
    CHECK(v.type == QPType::HA);
    CHECK(v.quasiprimitive);
    CHECK(v.socle_abelian);
    CHECK(v.socle_regular);
    CHECK(v.socle_order == 5);

    auto h23 = classify_action(automorphism_group(hamming(2, 3)));
    CHECK(h23.type == QPType::HA);
    CHECK(h23.primitive);
    CHECK(h23.socle_order == 9);

    auto h24 = classify_action(automorphism_group(hamming(2, 4)));
    CHECK(h24.type == QPType::HA);
    CHECK(h24.socle_order == 16);
}

TEST_CASE("almost simple actions classify as AS") {
    auto pairs = classify_action(induced_set_action(sym(6), 2).group);
    CHECK(pairs.type == QPType::AS);
    CHECK(pairs.primitive);
    CHECK(pairs.quasiprimitive);
    CHECK(pairs.minimal_normal_count == 1);
    CHECK(pairs.socle_order == 360);
    CHECK(pairs.socle_factor_count == 1);
    CHECK_FALSE(pairs.socle_regular);

    auto p23 = classify_action(psl2(23));
    CHECK(p23.type == QPType::AS);
    CHECK(p23.socle_order == 6072);

    auto a5 = classify_action(alt(5));
    CHECK(a5.type == QPType::AS);
    CHECK(a5.socle_order == 60);
}

TEST_CASE("product action wreath groups classify as PA") {
    auto v = classify_action(wreath_product_action(sym(5), 3));
    CHECK(v.type == QPType::PA);
    CHECK(v.primitive);
    CHECK(v.quasiprimitive);
    CHECK(v.minimal_normal_count == 1);
    CHECK(v.socle_factor_count == 3);
    CHECK(v.socle_factor_order == 60);
    CHECK(v.socle_order == mpz_class(60) * 60 * 60);
    CHECK_FALSE(v.socle_regular);

    auto v2 = classify_action(wreath_product_action(sym(5), 2));
    CHECK(v2.type == QPType::PA);
    CHECK(v2.socle_factor_count == 2);
}

TEST_CASE("holomorph and diagonal actions on a simple group") {
    auto reg = regular_representations(alt(5).generators());
    REQUIRE(reg.degree == 60);

    std::vector<Permutation> both = reg.left;
    both.insert(both.end(), reg.right.begin(), reg.right.end());
    PermGroup lr = PermGroup::from_generators(both);
    CHECK(lr.order() == 3600);
    auto hs = classify_action(lr);
    CHECK(hs.type == QPType::HS);
    CHECK(hs.quasiprimitive);
    CHECK(hs.minimal_normal_count == 2);
    CHECK(hs.socle_order == 3600);

    both.push_back(reg.inversion);
    PermGroup lri = PermGroup::from_generators(both);
    CHECK(lri.order() == 7200);
    auto sd = classify_action(lri);
    CHECK(sd.type == QPType::SD);
    CHECK(sd.minimal_normal_count == 1);
    CHECK(sd.socle_order == 3600);
    CHECK(sd.socle_factor_count == 2);
    CHECK(sd.socle_factor_order == 60);
    CHECK_FALSE(sd.socle_regular);

    // either factor alone acts regularly and is its own socle
    PermGroup lonly = PermGroup::from_generators(reg.left);
    CHECK(lonly.is_regular());
    auto as = classify_action(lonly);
    CHECK(as.type == QPType::AS);
    CHECK(as.quasiprimitive);
    CHECK(as.socle_regular);
}

TEST_CASE("socle factor probe splits direct powers") {
    auto reg = regular_representations(alt(5).generators());
    std::vector<Permutation> both = reg.left;
    both.insert(both.end(), reg.right.begin(), reg.right.end());
    PermGroup lr = PermGroup::from_generators(both);

    auto probe = socle_factor_probe(lr);
    CHECK(probe.factor_count == 2);
    CHECK(probe.factor_order == 60);
    REQUIRE(probe.factors.size() == 2);
    mpz_class prod = probe.factors[0].order() * probe.factors[1].order();
    CHECK(prod == lr.order());

    auto single = socle_factor_probe(alt(6));
    CHECK(single.factor_count == 1);
    CHECK(single.factor_order == 360);

    PermGroup c3 = PermGroup::from_generators({Permutation::from_cycles(3, {{0, 1, 2}})});
    CHECK_THROWS_AS(socle_factor_probe(c3), InvalidInput);
}

TEST_CASE("imprimitive transitive groups with an intransitive minimal normal subgroup") {
    // the rotation group of a hexagon: Z6 has Z2 and Z3 normal, both
    // intransitive
    PermGroup c6 = PermGroup::from_generators({Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
    auto v = classify_action(c6);
    CHECK(v.type == QPType::NotQuasiprimitive);
    CHECK_FALSE(v.quasiprimitive);
    CHECK_FALSE(v.primitive);

    // the full automorphism group of the rook's graph is primitive, but the
    // action on one copy of rows+columns (the clique action) is not even
    // quasiprimitive; see the clique report below
    auto rook = clique_graph(hamming(2, 3));
    PermGroup aut = automorphism_group(hamming(2, 3));
    PermGroup on_cliques = clique_action(aut, rook.cliques);
    auto cv = classify_action(on_cliques);
    CHECK(cv.type == QPType::NotQuasiprimitive);
}

TEST_CASE("classification is invariant under relabelling") {
    Permutation relabel = Permutation::from_cycles(15, {{0, 7, 3, 11, 5}, {1, 9, 2}});
    PermGroup pairs = induced_set_action(sym(6), 2).group;
    std::vector<Permutation> conj;
    for (const auto& g : pairs.generators()) conj.push_back(conjugate(g, relabel));
    auto v = classify_action(PermGroup::from_generators(conj));
    CHECK(v.type == QPType::AS);
    CHECK(v.socle_order == 360);
}

TEST_CASE("clique action report for the kneser graph") {
    Graph kg = kneser(6, 2);
    PermGroup act = induced_set_action(sym(6), 2).group;
    auto rep = check_clique_action_type(kg, act);
    CHECK(rep.vertex.type == QPType::AS);
    CHECK(rep.clique.type == QPType::AS);
    CHECK(rep.socle_clique_orbits == 1);
}

TEST_CASE("clique action report for hamming graphs") {
    Graph h23 = hamming(2, 3);
    auto rep = check_clique_action_type(h23, automorphism_group(h23));
    CHECK(rep.vertex.type == QPType::HA);
    CHECK(rep.clique.type == QPType::NotQuasiprimitive);
    CHECK(rep.socle_clique_orbits == 2);

    Graph h35 = hamming(3, 5);
    auto rep35 = check_clique_action_type(h35, wreath_product_action(sym(5), 3));
    CHECK(rep35.vertex.type == QPType::PA);
    CHECK(rep35.clique.type == QPType::NotQuasiprimitive);
    CHECK(rep35.socle_clique_orbits == 3);

    CHECK_THROWS_AS(check_clique_action_type(complement(hamming(2, 4)),
                                             automorphism_group(complement(hamming(2, 4)))),
                    NotInF);
}

TEST_CASE("clique action report for the sextic coset graph") {
    auto seed = find_psl2_s4_seed(23);
    auto res = coset_graph(psl2(23), seed.subgroup_gens, seed.g);
    auto rep = check_clique_action_type(res.graph, res.action.group);
    CHECK(rep.vertex.type == QPType::AS);
    CHECK(rep.clique.type == QPType::AS);
    CHECK(rep.vertex.socle_order == 6072);
}

TEST_CASE("intransitive direct products are seen through padded labels") {
    // Sym(4) x Sym(3) acting on 4 + 3 points has two orbits
    std::vector<Permutation> gens;
    PermGroup s4 = sym(4), s3 = sym(3);
    for (const auto& g : s4.generators()) gens.push_back(shift_labels(g, 0, 7));
    for (const auto& g : s3.generators()) gens.push_back(shift_labels(g, 4, 7));
    PermGroup prod = PermGroup::from_generators(gens);
    CHECK(prod.orbits().size() == 2);
    CHECK_THROWS_AS(classify_action(prod), NotTransitive);
}
