// Acceptance suite: one line per criterion, exact comparisons throughout.
#include "superjet/clifford.hpp"
#include "superjet/cubicforms.hpp"
#include "superjet/f4.hpp"
#include "superjet/pdesym.hpp"
#include "superjet/rootkit.hpp"
#include "superjet/spencer.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace superjet;

namespace {

int failures = 0;

void criterion(int n, const char* what, const Report& rep) {
    auto t = std::chrono::steady_clock::now();
    (void)t;
    bool ok = rep.pass();
    if (!ok) {
        for (auto& c : rep.checks)
            if (!c.exact)
                std::printf("    [%s] expected=%s got=%s\n", c.name.c_str(), c.expected.c_str(),
                            c.got.c_str());
    }
    std::printf("criterion %d (%s): %s\n", n, what, ok ? "PASS" : "FAIL");
    if (!ok) ++failures;
}

Report infrastructure_properties() {
    Report rep;
    rep.command = "infrastructure";
    rep.merge(pdesym::verify_bracket_infrastructure());

    // randomized superpolynomial axioms
    auto table = std::make_shared<VarTable>();
    std::vector<int> ids;
    for (int i = 0; i < 3; ++i) ids.push_back(table->add("a" + std::to_string(i), Parity::Even));
    for (int i = 0; i < 3; ++i) ids.push_back(table->add("b" + std::to_string(i), Parity::Odd));
    VarTablePtr vt = table;
    std::mt19937 rng(2468);
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, 3);
    std::uniform_int_distribution<size_t> pick(0, ids.size() - 1);
    auto random_poly = [&](Parity want) {
        SuperPoly p(vt);
        for (int tries = 0; tries < 30 && p.term_count() < 4; ++tries) {
            SuperPoly m = SuperPoly::constant(vt, Scalar(coef(rng)));
            int d = deg(rng);
            for (int k = 0; k < d; ++k) m = m * SuperPoly::var(vt, ids[pick(rng)]);
            if (!m.is_zero() && m.is_homogeneous() && m.parity() == want) p += m;
        }
        return p;
    };
    bool assoc = true, comm = true, leibniz = true, subcomp = true;
    for (int t = 0; t < 60; ++t) {
        Parity pp = t % 2 ? Parity::Odd : Parity::Even;
        Parity pq = (t / 2) % 2 ? Parity::Odd : Parity::Even;
        SuperPoly p = random_poly(pp), q = random_poly(pq), w = random_poly(Parity::Even);
        if ((p * q) * w != p * (q * w)) assoc = false;
        SuperPoly qp = q * p;
        if (pp == Parity::Odd && pq == Parity::Odd) qp = -qp;
        if (p * q != qp) comm = false;
        for (int v : {ids[0], ids[3]}) {
            SuperPoly lhs = partial(p * q, v);
            SuperPoly rhs = partial(p, v) * q;
            SuperPoly tail = p * partial(q, v);
            bool flip = vt->parity(v) == Parity::Odd && pp == Parity::Odd;
            rhs += flip ? -tail : tail;
            if (lhs != rhs) leibniz = false;
        }
        // disjoint supports: the images avoid each other's domain
        SuperPoly img1 = SuperPoly::var(vt, ids[1]) * SuperPoly::var(vt, ids[2]);
        SuperPoly img2 = SuperPoly::var(vt, ids[1]) * SuperPoly::var(vt, ids[4]);
        std::map<int, SuperPoly> s1{{ids[0], img1}};
        std::map<int, SuperPoly> s2{{ids[3], img2}};
        if (substitute(substitute(p, s1), s2) != substitute(substitute(p, s2), s1)) subcomp = false;
    }
    rep.add_bool("randomized_associativity", assoc);
    rep.add_bool("randomized_supercommutativity", comm);
    rep.add_bool("randomized_super_leibniz", leibniz);
    rep.add_bool("randomized_substitution_composition", subcomp);

    // scalar inversions
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    bool inverses = true;
    for (int t = 0; t < 1000; ++t) {
        Scalar x(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)),
                 mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
        if (x.is_zero()) continue;
        if (x * x.inverse() != Scalar(1)) inverses = false;
    }
    rep.add_bool("random_scalar_inverses_1000", inverses);
    return rep;
}

} // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();

    {
        Report rep;
        rep.command = "f4";
        rep.merge(f4().verify_brackets());
        rep.merge(f4().verify_super_jacobi(true));
        rep.merge(f4().verify_regrade(SystemLabel::I, {1}, grading_dims(simple_system(SystemLabel::I), {1})));
        rep.merge(f4().verify_regrade(SystemLabel::VI, {4}, grading_dims(simple_system(SystemLabel::VI), {4})));
        criterion(1, "F(4) construction: dim (24|16), super-Jacobi, contact graded dims", rep);
    }
    {
        Report rep;
        rep.command = "roots";
        rep.merge(verify_simple_system_closure());
        rep.merge(verify_positive_root_tables());
        rep.merge(verify_cartan_matrices());
        rep.merge(verify_parabolic_gradings());
        criterion(2, "root combinatorics: six systems, positive roots, Cartan matrices, gradings", rep);
    }
    {
        Report rep;
        rep.command = "spencer";
        rep.merge(spencer::verify(spencer::Grading::Odd, true));
        rep.merge(spencer::verify(spencer::Grading::Mixed, true));
        criterion(3, "Spencer cohomology: H^{0,1} and vanishing above, with intermediate ranks", rep);
    }
    {
        Report rep;
        rep.command = "clifford";
        const CliffordModel& C = clifford();
        rep.merge(C.verify_gamma_relations());
        rep.merge(C.verify_fierz(true));
        rep.merge(C.verify_cubic_spinor_identity());
        rep.merge(C.verify_pairing_invariance());
        rep.merge(C.verify_spin_matrix_pattern());
        rep.add("omega_vanishing_rank", "168", std::to_string(C.omega_vanishing_rank()));
        rep.merge(C.verify_cayley_quartic());
        rep.merge(C.lagrangian_kernel_check());
        criterion(4, "Clifford suite: gammas, Fierz, spinor identity, quartic invariants", rep);
    }
    {
        Report rep;
        rep.command = "cubic";
        rep.merge(cubicforms::verify_cubic_identity());
        rep.merge(cubicforms::invariant_cubics_kernel());
        criterion(5, "cubic identity and one-dimensional invariant kernels", rep);
    }
    {
        Report rep;
        rep.command = "2pde";
        rep.merge(cubicforms::verify_osculation());
        rep.merge(pdesym::verify_second_order(true));
        rep.merge(pdesym::perturbation_probe());
        criterion(6, "second-order system: regeneration, 40 symmetries, closure, probe", rep);
    }
    {
        Report rep;
        rep.command = "3pde";
        rep.merge(pdesym::verify_exponential_matrix());
        rep.merge(pdesym::verify_third_order(true));
        rep.merge(pdesym::verify_flag_growth());
        rep.merge(pdesym::verify_quartic_symmetries(true));
        rep.merge(pdesym::isomorphism_witness());
        rep.merge(f4().freudenthal_check());
        criterion(7, "third-order system: regeneration, flag growth, quartic, witness", rep);
    }
    {
        criterion(8, "solution superspace: three constraints and dims (7|5)", pdesym::verify_solution_space());
    }
    {
        criterion(9, "infrastructure: bracket realization, Jacobi, randomized axioms",
                  infrastructure_properties());
    }

    auto t1 = std::chrono::steady_clock::now();
    std::printf("acceptance: %d/9 criteria passed in %.1f s\n", 9 - failures,
                std::chrono::duration<double>(t1 - t0).count());
    return failures == 0 ? 0 : 1;
}
