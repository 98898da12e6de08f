#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superjet/jets.hpp"

#include <random>

using namespace superjet;

namespace {

JetContext mixed_ctx(int order) {
    return JetContext({Parity::Even, Parity::Even, Parity::Even, Parity::Odd, Parity::Odd}, order);
}

SuperPoly random_generating(const JetContext& ctx, std::mt19937& rng, Parity want) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3);
    std::vector<int> pool{ctx.u()};
    for (int i = 0; i < ctx.num_x(); ++i) {
        pool.push_back(ctx.x(i));
        pool.push_back(ctx.u1(i));
    }
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    SuperPoly p = ctx.zero();
    for (int tries = 0; tries < 40 && p.term_count() < 5; ++tries) {
        SuperPoly m = ctx.constant(Scalar(coef(rng)));
        int d = deg(rng);
        for (int k = 0; k < d; ++k) m = m * ctx.var(pool[pick(rng)]);
        if (!m.is_zero() && m.is_homogeneous() && m.parity() == want) p += m;
    }
    return p;
}

} // namespace

TEST_CASE("canonical index bookkeeping") {
    JetContext ctx = mixed_ctx(3);
    // symmetric in even pairs, antisymmetric in odd pairs
    CHECK(ctx.u2(0, 1) == ctx.u2(1, 0));
    auto [s34, id34] = ctx.u2(3, 4);
    auto [s43, id43] = ctx.u2(4, 3);
    CHECK(id34 == id43);
    CHECK(s34 == 1);
    CHECK(s43 == -1);
    // odd diagonal is structurally zero
    CHECK(ctx.u2(3, 3).first == 0);
    CHECK(ctx.u3(3, 4, 3).first == 0);
    // triple reordering sign: two odd swaps
    auto [s, id] = ctx.u3(4, 0, 3);
    CHECK(id == ctx.u3(0, 3, 4).second);
    CHECK(s == -1);
    // parity of derived coordinates
    CHECK(ctx.vars()->parity(ctx.u2(0, 3).second) == Parity::Odd);
    CHECK(ctx.vars()->parity(ctx.u2(3, 4).second) == Parity::Even);
}

TEST_CASE("total derivatives at both truncations") {
    JetContext ctx = mixed_ctx(3);
    SuperVectorField d0 = total_derivative(ctx, 0, 1);
    CHECK(d0.apply(ctx.var(ctx.x(0))) == ctx.constant(Scalar(1)));
    CHECK(d0.apply(ctx.var(ctx.x(1))).is_zero());
    CHECK(d0.apply(ctx.var(ctx.u1(1))).is_zero());  // order 1 truncation
    SuperVectorField d0_2 = total_derivative(ctx, 0, 2);
    CHECK(d0_2.apply(ctx.var(ctx.u1(1))) == ctx.var(ctx.u2(0, 1).second));
    // third-order lookup carries the reordering sign: (4,0,3) sorts with one
    // odd-odd swap, and the repeated odd index gives the zero coordinate
    SuperVectorField d4 = total_derivative(ctx, 4, 3);
    auto [sgn, id] = ctx.u3(4, 0, 3);
    CHECK(sgn == -1);
    CHECK(d4.apply(ctx.var(ctx.u2(0, 3).second)) == Scalar(sgn) * ctx.var(id));
    CHECK(d4.apply(ctx.var(ctx.u2(3, 4).second)).is_zero());
}

TEST_CASE("contact fields") {
    JetContext ctx = mixed_ctx(2);
    auto s1 = contact_field(ctx, ctx.constant(Scalar(1)));
    CHECK(s1.coeff.size() == 1);
    CHECK(s1.coefficient(ctx.u()) == ctx.constant(Scalar(1)));

    // odd generating function
    SuperPoly x3 = ctx.var(ctx.x(3));
    auto sx3 = contact_field(ctx, x3);
    CHECK(sx3.parity == Parity::Odd);
    CHECK(sx3.apply(ctx.var(ctx.u())) == x3);

    // the Euler-type grading function generates the scaling field
    SuperPoly Z = Scalar(2) * ctx.var(ctx.u());
    for (int i = 0; i < ctx.num_x(); ++i) Z -= ctx.var(ctx.x(i)) * ctx.var(ctx.u1(i));
    auto sz = contact_field(ctx, Z);
    CHECK(sz.apply(ctx.var(ctx.u())) == Scalar(2) * ctx.var(ctx.u()));
    for (int i = 0; i < ctx.num_x(); ++i) {
        CHECK(sz.apply(ctx.var(ctx.x(i))) == ctx.var(ctx.x(i)));
        CHECK(sz.apply(ctx.var(ctx.u1(i))) == ctx.var(ctx.u1(i)));
    }

    // mixed parity is rejected
    CHECK_THROWS_AS(contact_field(ctx, ctx.var(ctx.u()) + x3), std::invalid_argument);
}

TEST_CASE("insertion recovers the generating function") {
    JetContext ctx = mixed_ctx(2);
    std::mt19937 rng(31);
    for (int t = 0; t < 30; ++t) {
        SuperPoly f = random_generating(ctx, rng, t % 2 ? Parity::Odd : Parity::Even);
        if (f.is_zero()) continue;
        CHECK(contact_form_insertion(ctx, contact_field(ctx, f)) == f);
    }
}

TEST_CASE("lagrange bracket basics") {
    JetContext ctx = mixed_ctx(2);
    SuperPoly u = ctx.var(ctx.u());
    CHECK(lagrange_bracket(ctx, ctx.constant(Scalar(1)), u) == ctx.constant(Scalar(1)));
    // [f,f] = 0 for even f
    SuperPoly f = u * u + ctx.var(ctx.x(1)) * ctx.var(ctx.u1(2));
    CHECK(lagrange_bracket(ctx, f, f).is_zero());
    // Euler-type grading function
    SuperPoly Z = Scalar(2) * u;
    for (int i = 0; i < ctx.num_x(); ++i) Z -= ctx.var(ctx.x(i)) * ctx.var(ctx.u1(i));
    for (int i = 0; i < ctx.num_x(); ++i)
        CHECK(lagrange_bracket(ctx, Z, ctx.var(ctx.x(i))) == -ctx.var(ctx.x(i)));
    CHECK(lagrange_bracket(ctx, Z, ctx.constant(Scalar(1))) == ctx.constant(Scalar(-2)));
}

TEST_CASE("bracket realization on random pairs") {
    JetContext ctx = mixed_ctx(2);
    std::mt19937 rng(77);
    int checked = 0;
    for (int t = 0; t < 80 && checked < 50; ++t) {
        SuperPoly f = random_generating(ctx, rng, t % 3 == 0 ? Parity::Odd : Parity::Even);
        SuperPoly g = random_generating(ctx, rng, t % 2 == 0 ? Parity::Odd : Parity::Even);
        if (f.is_zero() || g.is_zero()) continue;
        ++checked;
        SuperVectorField lhs = field_bracket(contact_field(ctx, f), contact_field(ctx, g));
        SuperVectorField rhs = contact_field(ctx, lagrange_bracket(ctx, f, g));
        for (auto& [v, c] : lhs.coeff) CHECK(c == rhs.coefficient(v));
        for (auto& [v, c] : rhs.coeff) CHECK(c == lhs.coefficient(v));
    }
    CHECK(checked == 50);
}

TEST_CASE("prolongation") {
    JetContext ctx = mixed_ctx(2);
    auto p1 = prolong(ctx, ctx.constant(Scalar(1)), 2);
    CHECK(p1.coeff.size() == 1);  // just d_u
    for (int i = 0; i < ctx.num_x(); ++i) {
        auto px = prolong(ctx, ctx.var(ctx.x(i)), 2);
        for (int id : ctx.u2_ids()) CHECK(px.coefficient(id).is_zero());
    }

    // prolonged fields preserve the Cartan distribution
    std::mt19937 rng(13);
    for (int t = 0; t < 8; ++t) {
        SuperPoly f = random_generating(ctx, rng, t % 2 ? Parity::Odd : Parity::Even);
        if (f.is_zero()) continue;
        auto sf = prolong(ctx, f, 2);
        for (int i = 0; i < ctx.num_x(); ++i) {
            auto br = field_bracket(sf, total_derivative(ctx, i, 2));
            CHECK(cartan_residues(ctx, br).in_distribution());
        }
        for (int id : ctx.u2_ids()) {
            SuperVectorField v;
            v.vt = ctx.vars();
            v.parity = ctx.vars()->parity(id);
            v.add(id, ctx.constant(Scalar(1)));
            auto br = field_bracket(sf, v);
            CHECK(cartan_residues(ctx, br).in_distribution());
        }
    }

    // bracket of prolonged fields is the prolongation of the bracket
    for (int t = 0; t < 20; ++t) {
        SuperPoly f = random_generating(ctx, rng, t % 2 ? Parity::Odd : Parity::Even);
        SuperPoly g = random_generating(ctx, rng, (t / 2) % 2 ? Parity::Odd : Parity::Even);
        if (f.is_zero() || g.is_zero()) continue;
        SuperVectorField lhs = field_bracket(prolong(ctx, f, 2), prolong(ctx, g, 2));
        SuperVectorField rhs = prolong(ctx, lagrange_bracket(ctx, f, g), 2);
        for (auto& [v, c] : lhs.coeff) CHECK(c == rhs.coefficient(v));
        for (auto& [v, c] : rhs.coeff) CHECK(c == lhs.coefficient(v));
    }
}

TEST_CASE("third-order prolongation preserves the third-order distribution") {
    JetContext ctx({Parity::Odd, Parity::Odd, Parity::Odd, Parity::Odd}, 3);
    std::mt19937 rng(17);
    for (int t = 0; t < 6; ++t) {
        SuperPoly f = random_generating(ctx, rng, t % 2 ? Parity::Odd : Parity::Even);
        if (f.is_zero()) continue;
        auto sf = prolong(ctx, f, 3);
        for (int i = 0; i < ctx.num_x(); ++i) {
            auto br = field_bracket(sf, total_derivative(ctx, i, 3));
            CHECK(cartan_residues(ctx, br).in_distribution());
        }
    }
}
