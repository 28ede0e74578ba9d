#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "schur/numeric.hpp"
#include "schur/rng.hpp"

using namespace schur;

TEST_CASE("binomial convention") {
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(70, 35) == BigInt("112186277816662845432"));  // past 64-bit
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(Rational(1, 6)) == "0.166666666667");
    CHECK(decimal_string(Rational(1, 2)) == "0.5");
    CHECK(decimal_string(Rational(1, 3)) == "0.333333333333");
    CHECK(decimal_string(Rational(0)) == "0");
    CHECK(decimal_string(Rational(1)) == "1");
    CHECK(decimal_string(Rational(25, 36)) == "0.694444444444");
    CHECK(decimal_string(Rational(-3, 2)) == "-1.5");
    CHECK(decimal_string(Rational(999999999999, 1) + Rational(9, 10)) == "1e12");
    CHECK(decimal_string(Rational(1, 100000)) == "1e-5");

    SUBCASE("re-parses to within one unit in the 12th significant digit") {
        SplitMix64 rng(31);
        for (int i = 0; i < 500; ++i) {
            const long num = static_cast<long>(rng.below(1000000));
            const long den = static_cast<long>(rng.below(1000000)) + 1;
            Rational q(num, den);
            q.canonicalize();
            const double parsed = std::strtod(decimal_string(q).c_str(), nullptr);
            const double exact = q.get_d();
            if (exact == 0.0) {
                CHECK(parsed == 0.0);
                continue;
            }
            const double ulp12 = std::pow(10.0, std::floor(std::log10(std::abs(exact))) - 11);
            CHECK(std::abs(parsed - exact) <= ulp12);
        }
    }
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/4") == Rational(1, 4));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("2.5e-3") == Rational(1, 400));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
}

TEST_CASE("splitmix streams") {
    SUBCASE("derive is deterministic and index-sensitive") {
        CHECK(SplitMix64::derive_seed(42, 0) == SplitMix64::derive_seed(42, 0));
        CHECK(SplitMix64::derive_seed(42, 0) != SplitMix64::derive_seed(42, 1));
    }
    SUBCASE("128-bit uniform lies in [0,1)") {
        SplitMix64 rng(9);
        for (int i = 0; i < 100; ++i) {
            const Rational u = rng.uniform_rational_128();
            CHECK(u >= 0);
            CHECK(u < 1);
        }
    }
    SUBCASE("below is within range") {
        SplitMix64 rng(10);
        for (int i = 0; i < 1000; ++i) CHECK(rng.below(7) < 7);
    }
}
