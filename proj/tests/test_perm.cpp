#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geotrans/perm.hpp"

using geotrans::compose;
using geotrans::compose_into;
using geotrans::conjugate;
using geotrans::InvalidInput;
using geotrans::Permutation;

TEST_CASE("identity fixes everything") {
    auto e = Permutation::identity(5);
    CHECK(e.degree() == 5);
    CHECK(e.is_identity());
    for (int i = 0; i < 5; ++i) CHECK(e[i] == i);
}

TEST_CASE("construction validates the image table") {
    CHECK_NOTHROW(Permutation({1, 0, 2}));
    CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidInput);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), InvalidInput);
    CHECK_THROWS_AS(Permutation({-1, 0, 1}), InvalidInput);
}

TEST_CASE("products apply the left factor first") {
    // p = (0 1), q = (1 2); p then q sends 0 -> 1 -> 2
    auto p = Permutation::from_cycles(3, {{0, 1}});
    auto q = Permutation::from_cycles(3, {{1, 2}});
    auto pq = compose(p, q);
    CHECK(pq[0] == 2);
    CHECK(pq[1] == 0);
    CHECK(pq[2] == 1);
    // and the other order sends 0 -> 0 -> 1
    auto qp = compose(q, p);
    CHECK(qp[0] == 1);
    CHECK(pq != qp);
    for (int i = 0; i < 3; ++i) CHECK(pq[i] == q[p[i]]);
}

TEST_CASE("compose_into matches compose") {
    auto p = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
    auto q = Permutation::from_cycles(6, {{2, 5}});
    Permutation out;
    compose_into(p, q, out);
    CHECK(out == compose(p, q));
}

TEST_CASE("inverse undoes") {
    auto p = Permutation::from_cycles(7, {{0, 3, 5}, {1, 6}});
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
}

TEST_CASE("from_cycles places points and rejects junk") {
    auto p = Permutation::from_cycles(5, {{0, 2, 4}});
    CHECK(p[0] == 2);
    CHECK(p[2] == 4);
    CHECK(p[4] == 0);
    CHECK(p[1] == 1);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 5}}), InvalidInput);
    // repeated point makes the table non-bijective
    CHECK_THROWS_AS(Permutation::from_cycles(4, {{0, 1}, {1, 2}}), InvalidInput);
}

TEST_CASE("order is the lcm of cycle lengths") {
    CHECK(Permutation::identity(4).order() == 1);
    CHECK(Permutation::from_cycles(5, {{0, 1}}).order() == 2);
    CHECK(Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}}).order() == 6);
    CHECK(Permutation::from_cycles(9, {{0, 1, 2, 3}, {4, 5, 6}}).order() == 12);
}

TEST_CASE("cycles come out least point first") {
    auto p = Permutation::from_cycles(6, {{3, 4}, {0, 2, 1}});
    auto cyc = p.cycles();
    REQUIRE(cyc.size() == 2);
    CHECK(cyc[0] == std::vector<int>{0, 2, 1});
    CHECK(cyc[1] == std::vector<int>{3, 4});
    CHECK(p.to_cycle_string() == "(0 2 1)(3 4)");
    CHECK(Permutation::identity(3).to_cycle_string() == "()");
}

TEST_CASE("parity") {
    CHECK(Permutation::identity(4).parity() == 0);
    CHECK(Permutation::from_cycles(4, {{0, 1}}).parity() == 1);
    CHECK(Permutation::from_cycles(4, {{0, 1, 2}}).parity() == 0);
    CHECK(Permutation::from_cycles(4, {{0, 1, 2, 3}}).parity() == 1);
    CHECK(Permutation::from_cycles(5, {{0, 1}, {2, 3}}).parity() == 0);
}

TEST_CASE("conjugation relabels cycles") {
    auto a = Permutation::from_cycles(4, {{0, 1}});
    auto c = Permutation::from_cycles(4, {{0, 2}, {1, 3}});
    // (0 1) conjugated by (0 2)(1 3) is (2 3)
    CHECK(conjugate(a, c) == Permutation::from_cycles(4, {{2, 3}}));
}

TEST_CASE("commute") {
    auto a = Permutation::from_cycles(5, {{0, 1}});
    auto b = Permutation::from_cycles(5, {{2, 3}});
    auto c = Permutation::from_cycles(5, {{1, 2}});
    CHECK(geotrans::commute(a, b));
    CHECK(!geotrans::commute(a, c));
}

TEST_CASE("degree mismatches are rejected") {
    auto p = Permutation::identity(3);
    auto q = Permutation::identity(4);
    CHECK_THROWS_AS(compose(p, q), InvalidInput);
    CHECK_THROWS_AS(geotrans::commute(p, q), InvalidInput);
}
