#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lctkit/rational.hpp"

#include <random>
#include <set>

using namespace lctkit;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(3, -4) == Rational(-3, 4));
    CHECK(Rational(-3, -4) == Rational(3, 4));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("comparison by cross multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7, 8) > Rational(6, 7));
    CHECK(Rational(5, 6) >= Rational(5, 6));
}

TEST_CASE("no word-size overflow: arbitrary precision throughout") {
    Rational big(Int("123456789012345678901234567890"), Int(3));
    Rational sum = big + Rational(1, 3);
    CHECK(sum.den() == 3);
    CHECK(sum.num() == Int("123456789012345678901234567891"));
    Rational prod = big * big;
    CHECK(prod == Rational(Int("123456789012345678901234567890") * Int("123456789012345678901234567890"), Int(9)));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(6, 2).floor() == 3);
    CHECK(Rational(6, 2).ceil() == 3);
}

TEST_CASE("parse/print round trip is the identity") {
    for (const char* s : {"0", "1", "-1", "5/6", "-7/3", "41/42", "123456789012345678901234567890/7"}) {
        Rational r = Rational::parse(s);
        CHECK(r.str() == s);
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse("6/8") == Rational(3, 4));  // normalized on parse
    CHECK_THROWS_AS(Rational::parse(""), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("0.5"), std::domain_error);
}

TEST_CASE("parse/print round trip on random values") {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<long long> num(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-500, 500);
    std::uniform_int_distribution<long long> den(1, 500);
    for (int i = 0; i < 200; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!c.is_zero()) CHECK((a / c) * c == a);
    }
}
