#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superjet/spencer.hpp"

using namespace superjet;

namespace {

void check_report(const Report& r) {
    for (auto& c : r.checks) {
        INFO(r.command, "/", c.name, " expected=", c.expected, " got=", c.got);
        CHECK(c.exact);
    }
}

} // namespace

TEST_CASE("odd contact grading cohomology") { check_report(spencer::verify(spencer::Grading::Odd, true)); }

TEST_CASE("mixed contact grading cohomology") { check_report(spencer::verify(spencer::Grading::Mixed, true)); }

TEST_CASE("serial blocks agree with the parallel sweep") {
    spencer::SpencerResult a = spencer::compute(spencer::Grading::Odd, false);
    spencer::SpencerResult b = spencer::compute(spencer::Grading::Odd, true);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t d = 0; d < a.rows.size(); ++d) {
        CHECK(a.rows[d].H1 == b.rows[d].H1);
        CHECK(a.rows[d].Z1 == b.rows[d].Z1);
        CHECK(a.rows[d].B1 == b.rows[d].B1);
    }
}

TEST_CASE("cochain dimensions are the combinatorial counts") {
    spencer::SpencerResult r = spencer::compute(spencer::Grading::Odd, true);
    // odd grading symbol: (1|0) + (0|8); level-one degree-zero cochains are
    // g_{-1} (x) g_{-1}* + g_{-2} (x) g_{-2}*: dims (65|0) even-parity slice
    CHECK(r.rows[0].C1.even + r.rows[0].C1.odd == 65);
    // degree one: g_0 (x) g_{-1}* + g_{-1} (x) g_{-2}* -> 22*8 + 8 = 184
    CHECK(r.rows[1].C1.even + r.rows[1].C1.odd == 184);
    // top degree: only g_2 (x) g_{-2}*
    CHECK(r.rows[4].C1.even + r.rows[4].C1.odd == 1);
}

TEST_CASE("differential matrices compose to zero") {
    for (auto g : {spencer::Grading::Odd, spencer::Grading::Mixed})
        for (long d = 0; d <= 4; ++d)
            for (Parity p : {Parity::Even, Parity::Odd}) {
                SparseMat d0 = spencer::differential(g, 0, d, p);
                SparseMat d1 = spencer::differential(g, 1, d, p);
                CHECK(d1.cols == d0.rows);
                // compose column by column
                for (int c = 0; c < d0.cols; ++c) {
                    std::vector<Scalar> v(static_cast<size_t>(d0.rows));
                    for (int r = 0; r < d0.rows; ++r)
                        for (auto& [cc, s] : d0.row[static_cast<size_t>(r)])
                            if (cc == c) v[static_cast<size_t>(r)] += s;
                    std::vector<Scalar> w(static_cast<size_t>(d1.rows));
                    for (int r = 0; r < d1.rows; ++r)
                        for (auto& [cc, s] : d1.row[static_cast<size_t>(r)])
                            if (!v[static_cast<size_t>(cc)].is_zero())
                                w[static_cast<size_t>(r)] += s * v[static_cast<size_t>(cc)];
                    for (auto& s : w) CHECK(s.is_zero());
                }
            }
}

TEST_CASE("json emission") {
    spencer::SpencerResult r = spencer::compute(spencer::Grading::Mixed, true);
    std::string j = spencer::to_json(r);
    CHECK(j.find("\"grading\": \"mixed\"") != std::string::npos);
    CHECK(j.find("\"H1\"") != std::string::npos);
    CHECK(j == spencer::to_json(r));
}
