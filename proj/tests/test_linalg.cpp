#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superjet/linalg.hpp"

#include <random>

using namespace superjet;

TEST_CASE("bareiss rank against structured matrices") {
    ScalarMat m(3, 3);
    // rank-2 integer matrix
    long vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = Scalar(vals[r][c]);
    CHECK(m.rank() == 2);
    CHECK(ScalarMat::identity(5).rank() == 5);
    CHECK(ScalarMat(4, 6).rank() == 0);
}

TEST_CASE("rank with irrational entries") {
    // (1 s2; s2 2) has rank 1 since the rows are proportional by sqrt2
    ScalarMat m(2, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar::sqrt2();
    m.at(1, 0) = Scalar::sqrt2();
    m.at(1, 1) = Scalar(2);
    CHECK(m.rank() == 1);
    m.at(1, 1) = Scalar(3);
    CHECK(m.rank() == 2);
}

TEST_CASE("echelon solve and kernel") {
    ScalarMat a(3, 4);
    long vals[3][4] = {{1, 0, 2, -1}, {0, 1, 1, 1}, {1, 1, 3, 0}};  // row3 = row1 + row2
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) a.at(r, c) = Scalar(vals[r][c]);
    RowEchelon re(a);
    CHECK(re.rank() == 2);
    auto kernel = re.kernel_basis();
    CHECK(kernel.size() == 2);
    for (auto& v : kernel) {
        auto img = a.apply(v);
        for (auto& s : img) CHECK(s.is_zero());
    }
    std::vector<Scalar> b = {Scalar(3), Scalar(2), Scalar(5)};
    auto x = re.solve(b);
    REQUIRE(x.has_value());
    auto img = a.apply(*x);
    for (int r = 0; r < 3; ++r) CHECK(img[static_cast<size_t>(r)] == b[static_cast<size_t>(r)]);
    // inconsistent rhs
    b[2] = Scalar(6);
    CHECK(!re.solve(b).has_value());
}

TEST_CASE("sparse rank agrees with dense on random matrices") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> val(-3, 3), dim(4, 14);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int t = 0; t < 25; ++t) {
        int rows = dim(rng), cols = dim(rng);
        ScalarMat dense(rows, cols);
        SparseMat sparse;
        sparse.init(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                if (density(rng) > 0.35) continue;
                Scalar v(val(rng));
                if (v.is_zero()) continue;
                dense.at(r, c) = v;
                sparse.add(r, c, v);
            }
        CHECK(dense.rank() == sparse_rank(std::move(sparse)));
    }
}
