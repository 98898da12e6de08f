#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superjet/scalar.hpp"

#include <random>

using namespace superjet;

TEST_CASE("generators of the field") {
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
    CHECK(Scalar::i_sqrt2() * Scalar::i_sqrt2() == Scalar(-2));
    CHECK(Scalar::i() * Scalar::sqrt2() == Scalar::i_sqrt2());
}

TEST_CASE("ring identities") {
    Scalar a(mpq_class(3, 2), mpq_class(-1), mpq_class(0), mpq_class(5, 7));
    Scalar b(mpq_class(2), mpq_class(1, 3), mpq_class(-4), mpq_class(0));
    Scalar c(mpq_class(-1, 5), mpq_class(0), mpq_class(1), mpq_class(1));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a - a == Scalar());
}

TEST_CASE("conjugations") {
    Scalar a(mpq_class(1), mpq_class(2), mpq_class(3), mpq_class(4));
    CHECK(a.conj_i().conj_i() == a);
    CHECK(a.conj_s2().conj_s2() == a);
    // the full norm is rational
    Scalar n = a * a.conj_i() * a.conj_s2() * a.conj_i().conj_s2();
    CHECK(n.is_rational());
}

TEST_CASE("inversion on 1000 random nonzero elements") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    for (int t = 0; t < 1000; ++t) {
        Scalar x(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)),
                 mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == Scalar(1));
    }
    CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("printing") {
    CHECK(Scalar().str() == "0");
    CHECK(Scalar(1).str() == "1");
    CHECK(Scalar::i().str() == "i");
    CHECK((Scalar(1) + Scalar::sqrt2()).str() == "1+r2");
    CHECK(Scalar(-1, 2).str() == "-1/2");
}
