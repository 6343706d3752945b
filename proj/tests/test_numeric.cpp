#include <catch2/catch_amalgamated.hpp>

#include "ehrhart/numeric.hpp"

using namespace ehrhart;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(Int(60), 30) == Int("118264581564861424"));
    CHECK_THROWS_AS(binomial(5, -1), std::domain_error);

    SECTION("falling factorial convention for negative n") {
        // (-1)(-2)/2 = 1, (-2)(-3)(-4)/6 = -4
        CHECK(binomial(-1, 2) == 1);
        CHECK(binomial(-2, 3) == -4);
        CHECK(binomial(-1, 0) == 1);
    }
}

TEST_CASE("unsigned Stirling numbers of the first kind") {
    CHECK(stirling1_unsigned(0, 0) == 1);
    CHECK(stirling1_unsigned(5, 2) == 50);
    CHECK(stirling1_unsigned(4, 4) == 1);
    CHECK(stirling1_unsigned(4, 2) == 11);
    CHECK(stirling1_unsigned(3, 0) == 0);
    CHECK(stirling1_unsigned(2, 5) == 0);

    SECTION("row sums are factorials") {
        for (unsigned n = 1; n <= 8; ++n) {
            Int sum = 0;
            for (unsigned k = 0; k <= n; ++k)
                sum += stirling1_unsigned(n, k);
            CHECK(sum == factorial(n));
        }
    }
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(4) == make_rational(25, 12));
    CHECK_THROWS_AS(harmonic(0), std::domain_error);

    SECTION("d! H_d = stirling1(d+1, 2), exactly, for d <= 20") {
        for (unsigned d = 1; d <= 20; ++d)
            CHECK(Rational(harmonic(d) * factorial(d)) ==
                  Rational(stirling1_unsigned(d + 1, 2)));
    }
}

TEST_CASE("rational helpers") {
    CHECK(make_rational(6, 8) == make_rational(3, 4));
    CHECK(make_rational(3, -4) == make_rational(-3, 4));
    CHECK(make_rational(-3, 4).get_den() == 4);  // positive denominator
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);

    CHECK(fraction_string(make_rational(1, 1)) == "1/1");
    CHECK(fraction_string(make_rational(-7, 3)) == "-7/3");
    CHECK(parse_rational("-7/3") == make_rational(-7, 3));
    CHECK(parse_rational("42") == 42);
    CHECK_THROWS_AS(parse_rational("x/y"), std::invalid_argument);

    CHECK(floor_to_int(make_rational(7, 2)) == 3);
    CHECK(floor_to_int(make_rational(-7, 2)) == -4);
    CHECK(ceil_to_int(make_rational(7, 2)) == 4);
    CHECK(ceil_to_int(make_rational(-7, 2)) == -3);
    CHECK(ceil_to_int(Rational(11)) == 11);
}
