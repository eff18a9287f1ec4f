#include <doctest.h>

#include <algorithm>

#include "feq/errors.hpp"
#include "feq/interval.hpp"
#include "support.hpp"

using namespace feq;

TEST_CASE("membership respects endpoint closure") {
    const auto u = IntervalUnion::normalize({Interval::closed_open(1, 2), Interval::closed_open(3, 4)});
    CHECK_FALSE(u.contains(2.0));
    CHECK(u.contains(3.0));
    CHECK(u.contains(1.0));
    CHECK_FALSE(u.contains(4.0));
    CHECK_FALSE(IntervalUnion{Interval::open_closed(-2, -1)}.contains(-2.0));
    CHECK(IntervalUnion{Interval::open_closed(-2, -1)}.contains(-1.0));
    CHECK(Interval::point(0.5).contains(0.5));
}

TEST_CASE("interval construction rejects empty and non-finite sets") {
    CHECK_THROWS_AS(Interval(2, 1, true, false), ArgumentError);
    CHECK_THROWS_AS(Interval(1, 1, true, false), ArgumentError);
    CHECK_THROWS_AS(Interval(0, INFINITY, true, false), ArgumentError);
    CHECK_NOTHROW(Interval::point(1));
}

TEST_CASE("normalize merges, sorts and rejects overlap") {
    CHECK(IntervalUnion::normalize({Interval::closed_open(1, 2), Interval::closed_open(2, 3)}) ==
          IntervalUnion{Interval::closed_open(1, 3)});
    CHECK_THROWS_AS(IntervalUnion::normalize({Interval::closed_open(1, 3), Interval::closed_open(2, 4)}),
                    OverlapError);
    const auto sorted = IntervalUnion::normalize({Interval::closed_open(3, 4), Interval::closed_open(1, 2)});
    REQUIRE(sorted.size() == 2);
    CHECK(sorted[0] == Interval::closed_open(1, 2));
    CHECK(sorted[1] == Interval::closed_open(3, 4));
    // a shared endpoint owned by both sides is an overlap
    CHECK_THROWS_AS(IntervalUnion::normalize({Interval::closed(1, 2), Interval::closed_open(2, 3)}), OverlapError);
    // owned by neither side: two parts with a hole
    CHECK(IntervalUnion::normalize({Interval::open(1, 2), Interval::open(2, 3)}).size() == 2);
}

TEST_CASE("normalize is idempotent and agrees with part-wise membership") {
    test::Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Interval> parts;
        double at = rng.uniform(-10, 10);
        const long n = rng.integer(1, 6);
        for (long i = 0; i < n; ++i) {
            const double len = rng.uniform(0.1, 2.0);
            const bool glue = rng.coin();
            const double lo = glue ? at : at + rng.uniform(0.1, 1.0);
            parts.push_back(Interval::closed_open(lo, lo + len));
            at = lo + len;
        }
        std::shuffle(parts.begin(), parts.end(), rng.engine());
        const auto u = IntervalUnion::normalize(parts);
        CHECK(IntervalUnion::normalize(u.parts()) == u);
        for (int k = 0; k < 50; ++k) {
            const double x = rng.uniform(-12, 25);
            const bool any = std::any_of(parts.begin(), parts.end(), [x](const Interval& p) { return p.contains(x); });
            CHECK(u.contains(x) == any);
        }
        for (const auto& p : parts) {
            CHECK(u.contains(p.lo()));
        }
    }
}

TEST_CASE("set operations") {
    const auto u = IntervalUnion::normalize({Interval::closed_open(0, 1), Interval::closed_open(2, 3)});
    CHECK(u.measure() == doctest::Approx(2.0));
    CHECK(u.distance_to(1.5) == doctest::Approx(0.5));
    CHECK(u.distance_to(0.5) == 0.0);
    CHECK(u.closure_contains(1.0));
    CHECK_FALSE(u.contains(1.0));
    CHECK(to_string(u.reflected()) == "(-3,-2]u(-1,0]");
    CHECK(to_string(u.complement_in(Interval::open(-1, 4))) == "(-1,0)u[1,2)u[3,4)");
    CHECK(to_string(u.intersect(IntervalUnion{Interval::closed(0.5, 2.5)})) == "[0.5,1)u[2,2.5]");
}

TEST_CASE("interval text") {
    const auto u = parse_interval_union(" ( -1 , -0.5 ] u [0.5,1) ");
    REQUIRE(u.size() == 2);
    CHECK(u[0] == Interval::open_closed(-1, -0.5));
    CHECK(u[1] == Interval::closed_open(0.5, 1));
    CHECK(to_string(u) == "(-1,-0.5]u[0.5,1)");
    CHECK(parse_interval_union("[1,2)U[2,3)") == IntervalUnion{Interval::closed_open(1, 3)});

    const auto shifted = parse_interval("(-1/3-1, -1/3-0.5]");
    CHECK(shifted.lo() == -1.0 / 3 - 1);
    CHECK(shifted.hi() == -1.0 / 3 - 0.5);
    CHECK(parse_interval("[0, 2*pi)").hi() == doctest::Approx(6.283185307179586));
    CHECK(parse_interval("[1/2,1/2]").is_singleton());

    CHECK_THROWS_AS(parse_interval_union("[1,2"), IntervalSyntaxError);
    CHECK_THROWS_AS(parse_interval_union("1,2)"), IntervalSyntaxError);
    CHECK_THROWS_AS(parse_interval_union("[x,2)"), IntervalSyntaxError);
    CHECK_THROWS_AS(parse_interval_union("[1,2) [3,4)"), IntervalSyntaxError);
    CHECK_THROWS_AS(parse_interval_union("[1,3)u[2,4)"), OverlapError);
    CHECK_THROWS_AS(parse_interval("[1,2)u[3,4)"), IntervalSyntaxError);
    CHECK_THROWS_AS(parse_interval_union("[-inf,2)"), ParseError);
}

TEST_CASE("interval text round-trips") {
    test::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const double lo = rng.uniform(-100, 100);
        const double hi = lo + rng.uniform(1e-6, 50);
        const Interval iv{lo, hi, rng.coin(), rng.coin()};
        CHECK(parse_interval(to_string(iv)) == iv);
    }
}

TEST_CASE("reported domains") {
    CHECK(to_string(Domain::real_line()) == "(-inf,inf)");
    CHECK(to_string(Domain::punctured(1.0 / 3)) == "(-inf,0.33333333333333331)u(0.33333333333333331,inf)");
    CHECK(to_string(Domain::above(0, true)) == "[0,inf)");
    CHECK(to_string(Domain::below(-1, false)) == "(-inf,-1)");
    CHECK(Domain::punctured(2).contains(1e300));
    CHECK_FALSE(Domain::punctured(2).contains(2));
    CHECK_FALSE(Domain::above(0, false).contains(0));
}
