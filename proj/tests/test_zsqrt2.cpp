#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mset/rational.hpp"
#include "mset/zsqrt2.hpp"

using namespace mset;

TEST_CASE("ring arithmetic") {
    ZSqrt2 x{1, 1}, y{3, -2};
    CHECK((x + y) == ZSqrt2{4, -1});
    CHECK((x - y) == ZSqrt2{-2, 3});
    // (1 + s)(3 - 2s) = 3 - 2s + 3s - 2*2 = -1 + s
    CHECK((x * y) == ZSqrt2{-1, 1});
    CHECK(x.conj() == ZSqrt2{1, -1});
    CHECK(x.norm() == -1);
    CHECK(ZSqrt2{3, 2}.norm() == 1);
    CHECK(ZSqrt2{1, 1}.is_unit());
    CHECK(!ZSqrt2{2, 1}.is_unit());
}

TEST_CASE("unit inverse") {
    ZSqrt2 u{1, 1}; // norm -1, inverse -conj = (-1, 1)
    CHECK((u * u.inv()) == ZSqrt2{1, 0});
    ZSqrt2 v{3, 2}; // norm 1
    CHECK((v * v.inv()) == ZSqrt2{1, 0});
    CHECK_THROWS_AS(ZSqrt2(2, 0).inv(), ConfigError);
}

TEST_CASE("exact division") {
    ZSqrt2 a{5, 3}, b{1, 2};
    auto q = zsqrt2_divide(a * b, a);
    REQUIRE(q.has_value());
    CHECK(*q == b);
    CHECK(!zsqrt2_divide(ZSqrt2{1, 0}, ZSqrt2{2, 0}).has_value());
    CHECK(!zsqrt2_divide(ZSqrt2{1, 0}, ZSqrt2{0, 0}).has_value());
}

TEST_CASE("exact order matches values") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        ZSqrt2 x{(long long)(rng() % 2001) - 1000, (long long)(rng() % 2001) - 1000};
        ZSqrt2 y{(long long)(rng() % 2001) - 1000, (long long)(rng() % 2001) - 1000};
        if (x == y) continue;
        CHECK((x < y) == (x.value() < y.value()));
    }
}

TEST_CASE("dyadic comparison is exact") {
    // 1 - 0*sqrt2 vs 1.0 exactly
    CHECK(zsqrt2_compare_value(1, 0, 1.0) == 0);
    CHECK(zsqrt2_compare_value(1, 0, 0.8) == 1);
    CHECK(zsqrt2_compare_value(0, 0, 0.0) == 0);
    // 1 + sqrt2 vs nearby doubles
    ZSqrt2 x{1, 1};
    CHECK(compare_value_to(x, 2.4142135623730949) == 1);  // just below
    CHECK(compare_value_to(x, 2.4142135623730954) == -1); // just above
    // conjugate 1 - sqrt2 ~ -0.41421356
    CHECK(compare_conj_to(x, -0.5) == 1);
    CHECK(compare_conj_to(x, 0.0) == -1);
    // no element other than integers equals a dyadic rational
    CHECK(zsqrt2_equals_dyadic(ZSqrt2{1, 0}, 1.0));
    CHECK(!zsqrt2_equals_dyadic(ZSqrt2{1, 0}, 0.8));
    CHECK(!zsqrt2_equals_dyadic(ZSqrt2{1, 1}, 2.414213562373095));
}

TEST_CASE("dyadic comparison agrees with floats away from ties") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        ZSqrt2 x{(long long)(rng() % 20001) - 10000, (long long)(rng() % 20001) - 10000};
        double q = (double(rng() % 2000001) - 1000000.0) / 37.0;
        double v = x.value();
        if (std::abs(v - q) < 1e-6) continue;
        CHECK(compare_value_to(x, q) == (v < q ? -1 : 1));
    }
}

TEST_CASE("value recovery") {
    ZSqrt2 x{3, 2}; // 5.8284..., conj 0.1716
    auto r = zsqrt2_from_value(x.value(), 1.0);
    REQUIRE(r.has_value());
    CHECK(*r == x);
    // no match: point off the lattice projections with small conjugate
    CHECK(!zsqrt2_from_value(0.5, 1.0).has_value());
    // conjugate bound excludes
    CHECK(!zsqrt2_from_value(2.0, 1.0).has_value()); // conj(2) = 2 > 1
}

TEST_CASE("rationals") {
    Rational r(15, 8);
    CHECK(r.str() == "15/8");
    CHECK((Rational(1, 2) + Rational(1, 4) + Rational(1, 8) + Rational(1)).str() == "15/8");
    CHECK((Rational(3, 2) * Rational(5, 4)).str() == "15/8");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), ConfigError);
}
