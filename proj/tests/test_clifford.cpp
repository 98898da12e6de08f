#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superjet/clifford.hpp"

using namespace superjet;

namespace {

void check_report(const Report& r) {
    for (auto& c : r.checks) {
        INFO(r.command, "/", c.name, " expected=", c.expected, " got=", c.got);
        CHECK(c.exact);
    }
}

} // namespace

TEST_CASE("split frame action") {
    const CliffordModel& C = clifford();
    std::vector<Scalar> e1(7), R(7), f1(7);
    e1[0] = Scalar(1);
    R[3] = Scalar(1);
    f1[6] = Scalar(1);
    SpinVec one = C.basis_spinor(0);

    // contraction kills the scalar slot of the exterior module
    auto a = C.act(e1, one);
    for (auto& v : a) CHECK(v.is_zero());
    // the unit vector acts by +i on the even slots
    CHECK(C.act(R, one)[0] == Scalar::i());
    CHECK(C.act(R, C.basis_spinor(5))[5] == Scalar::i());
    CHECK(C.act(R, C.basis_spinor(1))[1] == -Scalar::i());
    // split Clifford relation e f + f e = -2 g(e,f)
    for (int s0 = 0; s0 < 8; ++s0) {
        SpinVec s = C.basis_spinor(s0);
        SpinVec v = C.act(e1, C.act(f1, s));
        SpinVec w = C.act(f1, C.act(e1, s));
        for (int r = 0; r < 8; ++r)
            CHECK(v[static_cast<size_t>(r)] + w[static_cast<size_t>(r)] == Scalar(-2) * s[static_cast<size_t>(r)]);
    }
}

TEST_CASE("gamma relations and volume normalization") { check_report(clifford().verify_gamma_relations()); }

TEST_CASE("pairing compatibility and invariance") { check_report(clifford().verify_pairing_invariance()); }

TEST_CASE("fierz identity and contraction factors") { check_report(clifford().verify_fierz(false)); }

TEST_CASE("serial and parallel fierz sweeps agree") {
    Report a = clifford().verify_fierz(false);
    Report b = clifford().verify_fierz(true);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t k = 0; k < a.checks.size(); ++k) CHECK(a.checks[k].got == b.checks[k].got);
}

TEST_CASE("bilinear multivector symmetry") {
    const CliffordModel& C = clifford();
    // omega^(p)(s,t) = (-1)^{p(p+1)/2} omega^(p)(t,s)
    int signs[4] = {1, -1, -1, 1};
    for (int p = 0; p <= 3; ++p)
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                Multivector st = C.omega_p(p, C.basis_spinor(a), C.basis_spinor(b));
                Multivector ts = C.omega_p(p, C.basis_spinor(b), C.basis_spinor(a));
                Multivector scaled;
                for (auto& [m, c] : ts.comp) scaled.add(m, Scalar(signs[p]) * c);
                CHECK(st == scaled);
            }
}

TEST_CASE("frozen omega2 fixture on the first hyperbolic pair") {
    const CliffordModel& C = clifford();
    Multivector w = C.omega_p(2, C.basis_spinor(0), C.basis_spinor(4));
    // computed once by direct Gamma contraction in the orthonormal frame;
    // equals minus the sum of the split-frame Cartan wedges
    Multivector expect;
    expect.add(0b0010100, Scalar::i());   // o2 ^ o4
    expect.add(0b0100010, Scalar::i());   // o1 ^ o5
    expect.add(0b1000001, -Scalar::i());  // o0 ^ o6
    CHECK(w == expect);
    auto coords = C.so_coordinates(C.bivector_matrix(w));
    for (int k = 0; k < 21; ++k) {
        auto [p, q] = C.so_label(k);
        Scalar want = (p + q == 6) ? Scalar(-1) : Scalar();
        CHECK(coords[static_cast<size_t>(k)] == want);
    }
}

TEST_CASE("omega0 is the pairing") {
    const CliffordModel& C = clifford();
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            Multivector w = C.omega_p(0, C.basis_spinor(a), C.basis_spinor(b));
            Scalar expect = C.pair(C.basis_spinor(a), C.basis_spinor(b));
            Scalar got = w.comp.count(0) ? w.comp.at(0) : Scalar();
            CHECK(got == expect);
        }
}

TEST_CASE("cubic spinor identity with polarization") { check_report(clifford().verify_cubic_spinor_identity()); }

TEST_CASE("spin matrix pattern in the split frame") { check_report(clifford().verify_spin_matrix_pattern()); }

TEST_CASE("vanishing of equivariant spinor-valued rotations") {
    const CliffordModel& C = clifford();
    CHECK(C.omega_vanishing_rank() == 168);
    // the elementary map omega = Gamma_{12} (x) eps^1 violates the diagonal
    // equation: sigma(Gamma_12) is invertible, so sigma(omega_{e_1}) e_1 != 0
    Multivector g12;
    g12.add(0b0000011, Scalar(1));
    SpinVec img = C.sigma(g12).apply(C.basis_spinor(0));
    bool violated = false;
    for (auto& v : img)
        if (!v.is_zero()) violated = true;
    CHECK(violated);
}

TEST_CASE("cayley quartic") {
    check_report(clifford().verify_cayley_quartic());
    check_report(clifford().lagrangian_kernel_check());
}

TEST_CASE("the quartic checkers reject perturbations") {
    const CliffordModel& C = clifford();
    QuarticTensor q = C.cayley_quartic();
    // drop one monomial: invariance and self-duality both break
    QuarticTensor damaged = q;
    damaged.add(static_cast<uint8_t>((1u << 0) | (1u << 1) | (1u << 4) | (1u << 5)), Scalar(-1));
    bool invariant = true;
    for (int k = 0; k < C.so_dim(); ++k)
        if (!C.so_action_on_quartic(k, damaged).is_zero()) invariant = false;
    CHECK(!invariant);
    QuarticTensor s = C.star(damaged);
    QuarticTensor minus;
    for (auto& [m, c] : damaged.comp) minus.add(m, -c);
    CHECK(!(s == minus));
    CHECK(C.eta_pairing(damaged, damaged) != Scalar(14));
}
