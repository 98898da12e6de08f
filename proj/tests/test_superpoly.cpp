#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superjet/superpoly.hpp"

#include <random>

using namespace superjet;

namespace {

struct Ring {
    std::shared_ptr<VarTable> table = std::make_shared<VarTable>();
    VarTablePtr vt;
    int l1, l2, t1, t2;
    Ring() {
        l1 = table->add("lambda1", Parity::Even);
        l2 = table->add("lambda2", Parity::Even);
        t1 = table->add("theta1", Parity::Odd);
        t2 = table->add("theta2", Parity::Odd);
        vt = table;
    }
    SuperPoly v(int id) const { return SuperPoly::var(vt, id); }
};

SuperPoly random_homogeneous(const Ring& r, std::mt19937& rng, Parity want) {
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3), pick(0, 3);
    SuperPoly p(r.vt);
    for (int tries = 0; tries < 30 && p.term_count() < 4; ++tries) {
        SuperPoly m = SuperPoly::constant(r.vt, Scalar(coef(rng)));
        int d = deg(rng);
        for (int k = 0; k < d; ++k) m = m * r.v(pick(rng));
        if (!m.is_zero() && m.parity() == want) p += m;
    }
    return p;
}

} // namespace

TEST_CASE("odd squares vanish and odd variables anticommute") {
    Ring r;
    CHECK((r.v(r.t1) * r.v(r.t1)).is_zero());
    CHECK(r.v(r.t1) * r.v(r.t2) == -(r.v(r.t2) * r.v(r.t1)));
}

TEST_CASE("cubic expansion fixture") {
    Ring r;
    SuperPoly c = r.v(r.l1) * r.v(r.l2) * r.v(r.l2) + Scalar(2) * (r.v(r.l2) * r.v(r.t1) * r.v(r.t2));
    CHECK(c.term_count() == 2);
    CHECK(c.parity() == Parity::Even);
    // coefficient bookkeeping survives reordering
    SuperPoly c2 = r.v(r.l2) * r.v(r.l1) * r.v(r.l2) - Scalar(2) * (r.v(r.t2) * r.v(r.l2) * r.v(r.t1));
    CHECK(c == c2);
}

TEST_CASE("left derivative") {
    Ring r;
    CHECK(partial(r.v(r.t1) * r.v(r.t2), r.t1) == r.v(r.t2));
    CHECK(partial(r.v(r.t1) * r.v(r.t2), r.t2) == -r.v(r.t1));
    // the derived quadratic of the cubic
    SuperPoly c = r.v(r.l1) * r.v(r.l2) * r.v(r.l2) + Scalar(2) * (r.v(r.l2) * r.v(r.t1) * r.v(r.t2));
    CHECK(partial(c, r.l1) == r.v(r.l2) * r.v(r.l2));
    CHECK(partial(r.v(r.l2) * r.v(r.t1) * r.v(r.t2), r.t2) == -(r.v(r.l2) * r.v(r.t1)));
}

TEST_CASE("substitution") {
    Ring r;
    auto table2 = std::make_shared<VarTable>();
    int u12 = table2->add("u12", Parity::Even);
    VarTablePtr vt2 = table2;
    SuperPoly half_l2_sq = Scalar(1, 2) * (r.v(r.l2) * r.v(r.l2));
    SuperPoly img = substitute_into(half_l2_sq, {{r.l2, SuperPoly::var(vt2, u12)}}, vt2);
    CHECK(img == Scalar(1, 2) * (SuperPoly::var(vt2, u12) * SuperPoly::var(vt2, u12)));

    SuperPoly tt = r.v(r.t1) * r.v(r.t2);
    CHECK(substitute(tt, {{r.t1, SuperPoly(r.vt)}}).is_zero());
    CHECK(substitute(tt, {{r.t1, r.v(r.t2)}}).is_zero());
    // parity mismatch is an error
    CHECK_THROWS_AS(substitute(tt, {{r.t1, r.v(r.l1)}}), std::invalid_argument);
}

TEST_CASE("supercommutativity and associativity on random homogeneous triples") {
    Ring r;
    std::mt19937 rng(99);
    for (int t = 0; t < 60; ++t) {
        Parity pp = t % 2 ? Parity::Odd : Parity::Even;
        Parity pq = (t / 2) % 2 ? Parity::Odd : Parity::Even;
        SuperPoly p = random_homogeneous(r, rng, pp);
        SuperPoly q = random_homogeneous(r, rng, pq);
        SuperPoly w = random_homogeneous(r, rng, Parity::Even);
        CHECK((p * q) * w == p * (q * w));
        SuperPoly qp = q * p;
        if (pp == Parity::Odd && pq == Parity::Odd) qp = -qp;
        CHECK(p * q == qp);
    }
}

TEST_CASE("derivation anticommutation") {
    Ring r;
    std::mt19937 rng(7);
    for (int t = 0; t < 40; ++t) {
        SuperPoly p = random_homogeneous(r, rng, t % 2 ? Parity::Odd : Parity::Even);
        // odd-odd: d1 d2 + d2 d1 = 0, odd squares vanish
        CHECK((partial(partial(p, r.t1), r.t2) + partial(partial(p, r.t2), r.t1)).is_zero());
        CHECK(partial(partial(p, r.t1), r.t1).is_zero());
        // even-odd commute
        CHECK(partial(partial(p, r.l1), r.t1) == partial(partial(p, r.t1), r.l1));
        // even-even commute
        CHECK(partial(partial(p, r.l1), r.l2) == partial(partial(p, r.l2), r.l1));
    }
}

TEST_CASE("super Leibniz for the left derivative") {
    Ring r;
    std::mt19937 rng(21);
    for (int t = 0; t < 40; ++t) {
        Parity pp = t % 2 ? Parity::Odd : Parity::Even;
        SuperPoly p = random_homogeneous(r, rng, pp);
        SuperPoly q = random_homogeneous(r, rng, (t / 2) % 2 ? Parity::Odd : Parity::Even);
        for (int v : {r.l1, r.t1}) {
            SuperPoly lhs = partial(p * q, v);
            SuperPoly rhs = partial(p, v) * q;
            SuperPoly tail = p * partial(q, v);
            bool flip = r.vt->parity(v) == Parity::Odd && pp == Parity::Odd;
            rhs += flip ? -tail : tail;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("substitution composes on disjoint supports") {
    Ring r;
    std::mt19937 rng(5);
    SuperPoly p = random_homogeneous(r, rng, Parity::Even);
    std::map<int, SuperPoly> s1{{r.l1, r.v(r.l2) * r.v(r.l2)}};
    std::map<int, SuperPoly> s2{{r.t1, r.v(r.t2)}};
    CHECK(substitute(substitute(p, s1), s2) == substitute(substitute(p, s2), s1));
}

TEST_CASE("table hygiene") {
    Ring r;
    auto other = std::make_shared<VarTable>();
    other->add("z", Parity::Even);
    VarTablePtr vt2 = other;
    CHECK_THROWS_AS(r.v(r.l1) * SuperPoly::var(vt2, 0), std::invalid_argument);
    CHECK_THROWS_AS(r.table->add("lambda1", Parity::Even), std::invalid_argument);
}
