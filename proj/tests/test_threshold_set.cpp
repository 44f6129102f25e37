#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lctkit/threshold_set.hpp"

#include <random>

using namespace lctkit;

namespace {

// (n-1)/n starting at n = 2, the standard coefficient family
MonotoneSequence std_coeffs() { return MonotoneSequence(1, -1, 1, 0, 2); }

// 1/2 + 1/n = (n+2)/(2n) starting at n = 2, decreasing to 1/2
MonotoneSequence half_plus() { return MonotoneSequence(1, 2, 2, 0, 2); }

Interval unit() { return Interval{}; }  // (0, 1]

}  // namespace

TEST_CASE("sequence normal form: content, sign, start shift") {
    MonotoneSequence s(2, -2, 2, 0, 2);  // (2n-2)/(2n), n >= 2
    CHECK(s == std_coeffs());
    CHECK(s.term(1) == Rational(1, 2));  // original n = 2 term
    CHECK(s.limit() == Rational(1));
    CHECK(s.direction() == Direction::increasing);
    MonotoneSequence neg(-1, 1, -1, 0, 2);  // same values with flipped signs
    CHECK(neg == std_coeffs());
}

TEST_CASE("sequence construction rejects broken invariants") {
    CHECK_THROWS_AS(MonotoneSequence(1, 0, 0, 1), std::domain_error);   // r = 0: no rational limit
    CHECK_THROWS_AS(MonotoneSequence(1, 0, 1, -1), std::domain_error);  // denominator vanishes at n = 1
    CHECK_THROWS_AS(MonotoneSequence(1, 1, 1, 1), std::domain_error);   // constant
    CHECK_THROWS_AS(MonotoneSequence(1, -1, 1, 0, 0), std::domain_error);
}

TEST_CASE("membership solves the linear index equation") {
    ThresholdSet pt = ThresholdSet::from_points({Rational(5, 6)}, unit());
    CHECK(pt.contains(Rational(5, 6)));
    CHECK_FALSE(pt.contains(Rational(1, 2)));

    ThresholdSet seq({}, {std_coeffs()}, unit());
    // oracle: scan indices directly
    bool found = false;
    for (int n = 2; n <= 200; ++n)
        if (Rational(n - 1, n) == Rational(99, 100)) found = true;
    CHECK(found);
    CHECK(seq.contains(Rational(99, 100)));

    for (int n = 2; n <= 200; ++n) CHECK(Rational(n - 1, n) != Rational(2, 5));
    CHECK_FALSE(seq.contains(Rational(2, 5)));  // (n-1)/n = 2/5 forces n = 5/3

    CHECK_FALSE(seq.contains(Rational(1)));  // the limit is not attained
    CHECK_THROWS_AS(pt.contains(Rational(2)), std::domain_error);
}

TEST_CASE("elements_above: exact finite slices, descending") {
    ThresholdSet seq({}, {half_plus()}, unit());
    // oracle: enumerate 1/2 + 1/n > 3/5 directly
    std::vector<Rational> expect;
    for (int n = 2; n < 50; ++n) {
        Rational v = Rational(1, 2) + Rational(1, n);
        if (v > Rational(3, 5)) expect.push_back(v);
    }
    std::sort(expect.begin(), expect.end(), std::greater<Rational>());
    CHECK(expect.size() == 8);
    CHECK(seq.elements_above(Rational(3, 5)) == expect);
    CHECK(seq.elements_above(Rational(3, 5)).front() == Rational(1));
    CHECK(seq.elements_above(Rational(3, 5)).back() == Rational(11, 18));

    ThresholdSet pts = ThresholdSet::from_points({Rational(1, 2), Rational(5, 6)}, unit());
    CHECK(pts.elements_above(Rational(2, 3)) == std::vector<Rational>{Rational(5, 6)});
}

TEST_CASE("elements_above refuses infinite slices") {
    ThresholdSet inc({}, {std_coeffs()}, unit());
    CHECK_THROWS_AS(inc.elements_above(Rational(4, 5)), infinite_slice_error);  // limit 1 > 4/5
    ThresholdSet dec({}, {half_plus()}, unit());
    CHECK_THROWS_AS(dec.elements_above(Rational(1, 2)), infinite_slice_error);  // every term exceeds the limit
    CHECK_THROWS_AS(dec.elements_above(Rational(1, 3)), infinite_slice_error);
    // boundary case: increasing sequence with limit exactly t has no terms above t
    CHECK(inc.elements_above(Rational(1)).empty());
}

TEST_CASE("accumulation points are the sequence limits") {
    ThresholdSet s({}, {half_plus()}, unit());
    CHECK(s.accumulation_points_above(Rational(2, 5)) == std::vector<Rational>{Rational(1, 2)});

    ThresholdSet finite = ThresholdSet::from_points({Rational(1, 2), Rational(5, 6)}, unit());
    CHECK(finite.accumulation_points_above(Rational(0)).empty());

    MonotoneSequence third(1, 3, 3, 0, 2);  // 1/3 + 1/n from n = 2
    ThresholdSet many({}, {half_plus(), third, std_coeffs()}, unit());
    std::vector<Rational> expect{Rational(1), Rational(1, 2)};
    CHECK(many.accumulation_points_above(Rational(2, 5)) == expect);
}

TEST_CASE("accumulation points are approached within any exact radius") {
    MonotoneSequence third(1, 3, 3, 0, 2);
    ThresholdSet s({Rational(9, 10)}, {half_plus(), third}, unit());
    Rational eps(1, 1000000);
    for (const Rational& lim : s.accumulation_points_above(Rational(0))) {
        // find a term within eps of the limit and distinct from it
        bool found = false;
        for (const MonotoneSequence& seq : s.sequences()) {
            if (seq.limit() != lim) continue;
            for (Int n = 1; n < 4000000; n *= 2) {
                Rational v = seq.term(n);
                if (v != lim && abs(v - lim) < eps) {
                    CHECK(s.contains(v));
                    found = true;
                    break;
                }
            }
        }
        CHECK(found);
        // and the isolated point is not reported
        CHECK(lim != Rational(9, 10));
    }
}

TEST_CASE("ascending chain condition verdicts with certificates") {
    ThresholdSet inc({}, {std_coeffs()}, unit());
    auto v = inc.satisfies_acc_above(Rational(0));
    CHECK_FALSE(v.satisfied);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->limit() == Rational(1));

    ThresholdSet dec({}, {half_plus()}, unit());
    CHECK(dec.satisfies_acc_above(Rational(0)).satisfied);
    // an increasing family entirely below the cutoff does not violate ACC above it
    CHECK(inc.satisfies_acc_above(Rational(1)).satisfied);
}

TEST_CASE("map_dcoef: exact affine image") {
    ThresholdSet zero = ThresholdSet::from_points({Rational(0)}, Interval::closed(Rational(0), Rational(1)));
    CHECK(zero.map_dcoef(3).points() == std::vector<Rational>{Rational(2, 3)});

    ThresholdSet half = ThresholdSet::from_points({Rational(1, 2)}, Interval::closed(Rational(0), Rational(1)));
    CHECK(half.map_dcoef(2).points() == std::vector<Rational>{Rational(3, 4)});

    ThresholdSet seq({}, {std_coeffs()}, unit());
    ThresholdSet mapped = seq.map_dcoef(2);
    REQUIRE(mapped.sequences().size() == 1);
    CHECK(mapped.sequences()[0] == MonotoneSequence(2, -1, 2, 0));  // (2n-1)/(2n)
}

TEST_CASE("map_dcoef commutes with membership") {
    ThresholdSet s({Rational(1, 3), Rational(1, 2)}, {half_plus()}, Interval::closed(Rational(0), Rational(1)));
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> num(0, 60);
    std::uniform_int_distribution<long long> den(1, 60);
    std::uniform_int_distribution<long long> ms(1, 50);
    for (int i = 0; i < 400; ++i) {
        long long d = den(rng);
        Rational f(num(rng) % (d + 1), d);  // f in [0, 1]
        Int m = ms(rng);
        ThresholdSet img = s.map_dcoef(m);
        Rational y = (Rational(m - 1) + f) / Rational(m);
        CHECK(img.contains(y) == s.contains(f));
    }
}

TEST_CASE("canonicalization: dedup and point absorption, idempotent") {
    // a point equal to a sequence term is absorbed; duplicate sequences collapse
    ThresholdSet s({Rational(1, 2), Rational(1, 2), Rational(7, 10)},
                   {half_plus(), MonotoneSequence(1, 2, 2, 0, 2)}, unit());
    CHECK(s.sequences().size() == 1);
    CHECK(s.points() == std::vector<Rational>{Rational(1, 2)});  // 7/10 is the n = 5 term

    ThresholdSet again(s.points(), s.sequences(), s.ambient());
    CHECK(again == s);
}

TEST_CASE("union merges and recanonicalizes") {
    ThresholdSet a = ThresholdSet::from_points({Rational(3, 4)}, unit());
    ThresholdSet b({}, {half_plus()}, unit());
    ThresholdSet u = ThresholdSet::union_of(a, b);
    CHECK(u.points().empty());  // 3/4 is the n = 4 term of the family
    CHECK(u.sequences().size() == 1);
    CHECK(u.contains(Rational(3, 4)));
}

TEST_CASE("round trip: slice elements are members, non-elements are not") {
    ThresholdSet s({Rational(2, 3)}, {half_plus()}, unit());
    Rational t(3, 5);
    auto elems = s.elements_above(t);
    for (const Rational& x : elems) CHECK(s.contains(x));

    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long long> raw(1, 997);
    int checked = 0;
    for (int i = 0; checked < 500 && i < 5000; ++i) {
        long long d = raw(rng);
        Rational x(raw(rng) % d + 1, d);  // in (0, 1]
        if (std::find(elems.begin(), elems.end(), x) != elems.end()) continue;
        ++checked;
        CHECK((!s.contains(x) || x <= t));
    }
    CHECK(checked == 500);
}

TEST_CASE("sup_below: attained cases") {
    ThresholdSet s({Rational(2, 3)}, {half_plus()}, unit());
    CHECK(s.sup_below(Rational(1)) == Rational(5, 6));        // first family term below 1
    CHECK(s.sup_below(Rational(13, 24)) == Rational(27, 50));  // 1/2 + 1/25, first term under 13/24
    CHECK(s.sup_below(Rational(1, 2)) == std::nullopt);       // everything sits above 1/2

    ThresholdSet pts = ThresholdSet::from_points({Rational(1, 4), Rational(3, 4)}, unit());
    CHECK(pts.sup_below(Rational(3, 4)) == Rational(1, 4));
}

TEST_CASE("sup_below: unattained supremum is refused, domination is fine") {
    ThresholdSet inc({}, {std_coeffs()}, unit());
    CHECK_THROWS_AS(inc.sup_below(Rational(1)), sup_not_attained_error);

    // the limit 1 is dominated by an explicit point 1 once x moves past it
    ThresholdSet dominated({Rational(1)}, {std_coeffs()}, unit());
    CHECK(dominated.sup_below(Rational(3, 2)) == Rational(1));
    CHECK_THROWS_AS(dominated.sup_below(Rational(1)), sup_not_attained_error);
}

TEST_CASE("sup_below under domination, exact value") {
    // increasing family with limit 1/2 plus a point at 1/2: sup below 3/4 is the point
    MonotoneSequence half_from_below(1, -1, 2, 0, 2);  // (n-1)/(2n) -> 1/2 from below
    ThresholdSet s({Rational(1, 2)}, {half_from_below}, Interval::closed(Rational(0), Rational(1)));
    CHECK(s.sup_below(Rational(3, 4)) == Rational(1, 2));
}
