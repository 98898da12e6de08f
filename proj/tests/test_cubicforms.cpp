#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superjet/cubicforms.hpp"

using namespace superjet;

namespace {

void check_report(const Report& r) {
    for (auto& c : r.checks) {
        INFO(r.command, "/", c.name, " expected=", c.expected, " got=", c.got);
        CHECK(c.exact);
    }
}

} // namespace

TEST_CASE("cubic form identity") { check_report(cubicforms::verify_cubic_identity()); }

TEST_CASE("osp(2|2) matrices close with the stated relations") {
    check_report(cubicforms::verify_osp22(Scalar(1)));
    check_report(cubicforms::verify_osp22(Scalar(7)));
    CHECK_THROWS_AS(cubicforms::osp22_action(Scalar()), std::invalid_argument);
}

TEST_CASE("invariant cubics") { check_report(cubicforms::invariant_cubics_kernel()); }

TEST_CASE("unconstrained action detects the forced constants") {
    // with free c2 the odd raising generator moves the cubic by
    // (2 c1 - c2) (w2)^2 w3; the constraint kills it
    auto table = std::make_shared<VarTable>();
    std::array<int, 4> w{};
    for (int i = 0; i < 4; ++i)
        w[static_cast<size_t>(i)] = table->add("w" + std::to_string(i + 1), i < 2 ? Parity::Even : Parity::Odd);
    VarTablePtr vt = table;
    auto V = [&](int a) { return SuperPoly::var(vt, w[static_cast<size_t>(a)]); };
    SuperPoly cform = V(0) * V(1) * V(1) - Scalar(2) * (V(1) * V(2) * V(3));
    Scalar c1(1), c2(5);
    ScalarMat A(4, 4);
    A.at(0, 2) = c2;
    A.at(3, 1) = c1;
    // dual action on covector coordinates: rho*(A) w^i = sum_j -(-1)^{|A||i|} A_{ij} w^j
    SuperPoly out(vt);
    for (int i = 0; i < 4; ++i) {
        SuperPoly img(vt);
        for (int j = 0; j < 4; ++j) {
            Scalar v = -A.at(i, j);
            if (i >= 2) v = -v;  // odd generator against an odd coordinate
            if (!v.is_zero()) img += v * V(j);
        }
        if (!img.is_zero()) out += img * partial(cform, w[static_cast<size_t>(i)]);
    }
    CHECK(out == (Scalar(2) * c1 - c2) * (V(1) * V(1) * V(2)));
}

TEST_CASE("osculation pipeline") { check_report(cubicforms::verify_osculation()); }

TEST_CASE("derived tensors contract back to the cubic") {
    auto table = std::make_shared<VarTable>();
    std::array<int, 4> t{};
    t[0] = table->add("l1", Parity::Even);
    t[1] = table->add("l2", Parity::Even);
    t[2] = table->add("o1", Parity::Odd);
    t[3] = table->add("o2", Parity::Odd);
    VarTablePtr vt = table;
    cubicforms::CubicTensors C = cubicforms::primal_cubic(vt, t);
    SuperPoly s1(vt), s3(vt);
    for (int c = 0; c < 4; ++c) s1 += SuperPoly::var(vt, t[static_cast<size_t>(c)]) * C.C1[static_cast<size_t>(c)];
    CHECK(s1 == C.C);
    for (int c = 0; c < 4; ++c)
        for (int b = 0; b < 4; ++b)
            for (int a = 0; a < 4; ++a) {
                SuperPoly cab = partial(C.C2[static_cast<size_t>(b)][static_cast<size_t>(c)], t[static_cast<size_t>(a)]);
                s3 += SuperPoly::var(vt, t[static_cast<size_t>(c)]) *
                      SuperPoly::var(vt, t[static_cast<size_t>(b)]) *
                      SuperPoly::var(vt, t[static_cast<size_t>(a)]) * cab;
            }
    CHECK(s3 == C.C);
}
