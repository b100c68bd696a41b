#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "sympol/rational.hpp"

using namespace sympol;

TEST_CASE("rationals are canonical") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat(2, -4) == rat(-1, 2));
    CHECK(to_string(rat(2, -4)) == "-1/2");
    CHECK(to_string(rat(0, 7)) == "0");
    CHECK(to_string(rat(42)) == "42");
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("string round trip") {
    for (const char* text : {"0", "1", "-1", "7/3", "-12/35", "100000000000000000001/7"})
        CHECK(to_string(rat_from_string(text)) == text);
    CHECK(to_string(rat_from_string("4/6")) == "2/3");
    CHECK(to_string(rat_from_string("+5")) == "5");
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("3/0"), std::invalid_argument);
}

TEST_CASE("pow") {
    CHECK(pow(rat(-2, 3), 3) == rat(-8, 27));
    CHECK(pow(rat(5), 0) == rat(1));
    CHECK(pow(rat(0), 2) == rat(0));
}

TEST_CASE("grid determinant and inverse") {
    RationalGrid j = {{rat(0), rat(1)}, {rat(-1), rat(0)}};
    CHECK(determinant(j) == rat(1));
    CHECK(inverse(j) == RationalGrid{{rat(0), rat(-1)}, {rat(1), rat(0)}});

    testing::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng.below(4);
        RationalGrid m(n, RationalVector(n, Rational(0)));
        for (auto& row : m)
            for (auto& q : row) q = rng.rational();
        const Rational det = determinant(m);
        if (is_zero(det)) continue;
        CHECK(multiply(m, inverse(m)) == identity_grid(n));
    }

    RationalGrid singular = {{rat(1), rat(2)}, {rat(2), rat(4)}};
    CHECK(determinant(singular) == rat(0));
    CHECK_THROWS_AS(inverse(singular), std::domain_error);
}

TEST_CASE("row reduction ranks") {
    RationalGrid rows = {{rat(1), rat(2), rat(3)},
                         {rat(2), rat(4), rat(6)},
                         {rat(0), rat(1), rat(1)}};
    CHECK(row_reduce(rows) == 2);
    RationalGrid zero = {{rat(0), rat(0)}};
    CHECK(row_reduce(zero) == 0);
}
