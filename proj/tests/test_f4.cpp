#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superjet/f4.hpp"

using namespace superjet;

namespace {

void check_report(const Report& r) {
    for (auto& c : r.checks) {
        INFO(r.command, "/", c.name, " expected=", c.expected, " got=", c.got);
        CHECK(c.exact);
    }
}

} // namespace

TEST_CASE("bracket fixtures") { check_report(f4().verify_brackets()); }

TEST_CASE("raising-lowering bracket against the frozen bivector") {
    // [phi0+, psi0] = (1/3) omega2(phi0, psi0) - (1/2) Z, with the bivector
    // equal to minus the sum of Cartan wedges
    const F4Algebra& F = f4();
    auto& entry = F.algebra().bracket(F.idx_spinor_dual(0), F.idx_spinor(4));
    std::map<int, Scalar> got(entry.begin(), entry.end());
    std::map<int, Scalar> want;
    for (int k = 0; k < 21; ++k) {
        auto [p, q] = F.model().so_label(k);
        if (p + q == 6) want[F.idx_so(k)] = Scalar(-1, 3);
    }
    want[F.idx_Z()] = Scalar(-1, 2);
    CHECK(got == want);
}

TEST_CASE("super jacobi on all basis triples") { check_report(f4().verify_super_jacobi(true)); }

TEST_CASE("root decomposition") { check_report(f4().verify_root_decomposition()); }

TEST_CASE("regradings match the combinatorial dimension strings") {
    const F4Algebra& F = f4();
    check_report(F.verify_regrade(SystemLabel::I, {1}, grading_dims(simple_system(SystemLabel::I), {1})));
    check_report(F.verify_regrade(SystemLabel::VI, {4}, grading_dims(simple_system(SystemLabel::VI), {4})));
    check_report(F.verify_regrade(SystemLabel::I, {1, 2}, grading_dims(simple_system(SystemLabel::I), {1, 2})));
    check_report(F.verify_regrade(SystemLabel::V, {2}, grading_dims(simple_system(SystemLabel::V), {2})));
}

TEST_CASE("regrading the construction grading is the identity") {
    const F4Algebra& F = f4();
    SuperLieAlgebra g = F.regrade(simple_system(SystemLabel::I), {1});
    for (int i = 0; i < g.dim(); ++i) CHECK(g.element(i).degree == F.algebra().element(i).degree);
}

TEST_CASE("centralizers") { check_report(f4().verify_centralizers()); }

TEST_CASE("transitivity and bracket generation") { check_report(f4().verify_transitivity_and_generation()); }

TEST_CASE("alternating four-bracket reproduces the quartic") {
    check_report(f4().freudenthal_check());
    auto c = f4().freudenthal_constant();
    REQUIRE(c.has_value());
    CHECK(*c == Scalar(-1, 6));
}

TEST_CASE("the jacobi sweep detects a corrupted constant") {
    // copy the algebra, damage one bracket, and watch the identity fail
    SuperLieAlgebra bad = f4().algebra();
    const F4Algebra& F = f4();
    auto entry = bad.bracket(F.idx_spinor_dual(0), F.idx_spinor(1));
    std::vector<std::pair<int, Scalar>> tweaked(entry.begin(), entry.end());
    tweaked.push_back({F.idx_Z(), Scalar(1, 7)});
    bad.set_bracket(F.idx_spinor_dual(0), F.idx_spinor(1), tweaked);

    const int n = bad.dim();
    bool violation = false;
    for (int x = 0; x < n && !violation; ++x) {
        int px = bad.element(x).parity == Parity::Odd ? 1 : 0;
        for (int y = 0; y < n && !violation; ++y) {
            int py = bad.element(y).parity == Parity::Odd ? 1 : 0;
            for (int z = 0; z < n && !violation; ++z) {
                int pz = bad.element(z).parity == Parity::Odd ? 1 : 0;
                std::vector<Scalar> acc(static_cast<size_t>(n));
                auto term = [&](int a, int b, int c, int sign_exp) {
                    for (auto& [m, cm] : bad.bracket(b, c))
                        for (auto& [k, ck] : bad.bracket(a, m)) {
                            Scalar v = cm * ck;
                            acc[static_cast<size_t>(k)] += (sign_exp & 1) ? -v : v;
                        }
                };
                term(x, y, z, px * pz);
                term(y, z, x, py * px);
                term(z, x, y, pz * py);
                for (auto& s : acc)
                    if (!s.is_zero()) violation = true;
            }
        }
    }
    CHECK(violation);
}

TEST_CASE("structure constants export is deterministic valid JSON") {
    std::string a = f4().structure_constants_json();
    std::string b = f4().structure_constants_json();
    CHECK(a == b);
    CHECK(a.find("\"dimension\"") != std::string::npos);
    CHECK(a.find("\"brackets\"") != std::string::npos);
}
