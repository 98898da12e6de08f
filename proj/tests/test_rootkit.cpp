#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superjet/rootkit.hpp"

using namespace superjet;

namespace {

void check_report(const Report& r) {
    for (auto& c : r.checks) {
        INFO(r.command, "/", c.name, " expected=", c.expected, " got=", c.got);
        CHECK(c.exact);
    }
}

} // namespace

TEST_CASE("root counts and the invariant form") {
    const RootSystem& rs = RootSystem::instance();
    CHECK(rs.even.size() == 20);
    CHECK(rs.odd.size() == 16);
    Weight d;
    d.c[3] = 1;
    CHECK(inner(d, d) == -3);
    // every odd root is isotropic
    for (auto& w : rs.odd) CHECK(sgn(inner(w, w)) == 0);
}

TEST_CASE("odd reflections generate the six simple systems") {
    check_report(verify_simple_system_closure());
    // reflecting at a non-isotropic or even root is rejected
    CHECK_THROWS_AS(odd_reflect(simple_system(SystemLabel::I), 1), std::invalid_argument);
}

TEST_CASE("positive root tables") { check_report(verify_positive_root_tables()); }

TEST_CASE("cartan matrices") { check_report(verify_cartan_matrices()); }

TEST_CASE("parabolic gradings against the table") { check_report(verify_parabolic_gradings()); }

TEST_CASE("dynkin descriptors carry the highest-root labels") {
    auto d1 = dynkin_descriptor(simple_system(SystemLabel::I));
    CHECK(d1.highest_root_labels == std::array<long, 4>{2, 3, 2, 1});
    CHECK(d1.odd == std::array<bool, 4>{true, false, false, false});
    CHECK(d1.isotropic == std::array<bool, 4>{true, false, false, false});
    auto d6 = dynkin_descriptor(simple_system(SystemLabel::VI));
    CHECK(d6.highest_root_labels == std::array<long, 4>{2, 4, 3, 2});
    CHECK(d6.odd == std::array<bool, 4>{false, true, false, false});
}

TEST_CASE("deformation parameter orbits") {
    auto orb = alpha_orbit(mpq_class(2));
    std::set<mpq_class> expect{mpq_class(2),      mpq_class(1, 2),  mpq_class(-3),
                               mpq_class(-1, 3),  mpq_class(-3, 2), mpq_class(-2, 3)};
    CHECK(orb == expect);
    CHECK(orb.count(mpq_class(-2, 3)) == 1);
    auto orb1 = alpha_orbit(mpq_class(1));
    CHECK(orb1 == std::set<mpq_class>{mpq_class(1), mpq_class(-2), mpq_class(-1, 2)});
    CHECK_THROWS_AS(alpha_orbit(mpq_class(0)), std::invalid_argument);
    CHECK_THROWS_AS(alpha_orbit(mpq_class(-1)), std::invalid_argument);
}

TEST_CASE("contact grading layer contents") {
    GradingDims odd = grading_dims(simple_system(SystemLabel::I), {1});
    CHECK(odd.str() == "1|0,0|8,22|0,0|8,1|0");
    GradingDims mixed = grading_dims(simple_system(SystemLabel::VI), {4});
    CHECK(mixed.str() == "1|0,6|4,10|8,6|4,1|0");
}
