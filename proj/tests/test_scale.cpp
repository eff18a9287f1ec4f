#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <variant>

#include "feq/errors.hpp"
#include "feq/scale.hpp"
#include "support.hpp"

using namespace feq;

namespace {

/// Multiplies or divides by b one step at a time until the data is reached.
double walk(double b, const InitialData& d, double x) {
    // inner radius of the part on x's side; b < 0 parts share it
    double inner = INFINITY;
    for (const auto& part : d.set().parts())
        if (b < 0 || (part.lo() > 0) == (x > 0))
            inner = std::min({inner, std::fabs(part.lo()), std::fabs(part.hi())});
    for (int i = 0; i < 5000; ++i) {
        if (d.contains(x)) return d(x);
        const double tol = 1e-9 * std::fabs(x);
        const double gap = d.set().distance_to(x);
        if (gap > 0 && gap < tol) return d.near(x, tol);
        x = std::fabs(x) < inner ? x * b : x / b;
    }
    FAIL("walk did not reach the data");
    return 0;
}

}  // namespace

TEST_CASE("make_scale_problem") {
    const auto p = make_scale_problem(2, test::data("[1,2)", "x"));
    CHECK(p.b() == 2.0);
    CHECK(p.epsilon() == 1.0);
    CHECK_FALSE(p.delta().has_value());

    CHECK_THROWS_AS(make_scale_problem(2, test::data("(-0.5,0.5)", "x")), PenlpViolation);
    CHECK_THROWS_AS(make_scale_problem(2, test::data("[0,1)", "x")), PenlpViolation);
    CHECK_THROWS_AS(make_scale_problem(2, test::data("(0,1)", "x")), PenlpViolation);

    const auto q = make_scale_problem(-2, test::data("(-2,-1]u[1,2)", "x"));
    CHECK(q.b() == -2.0);
    CHECK(q.epsilon() == 1.0);

    // |b| < 1 is the same equation read backwards
    const auto half = make_scale_problem(0.5, test::data("[1,2)", "x"));
    CHECK(half.b() == 2.0);

    const auto both = make_scale_problem(3, test::data("(-6,-2]u[0.5,1.5)", "x"));
    CHECK(both.epsilon() == 0.5);
    CHECK(both.delta() == 2.0);

    CHECK_THROWS_AS(make_scale_problem(0, test::data("[1,2)", "x")), ZeroBError);
    CHECK_THROWS_AS(make_scale_problem(1, test::data("[1,2)", "x")), ArgumentError);
    CHECK_THROWS_AS(make_scale_problem(-1, test::data("[1,2)", "x")), ArgumentError);
    CHECK_THROWS_AS(make_scale_problem(2, test::data("[1,3)", "x")), ShapeError);
    CHECK_THROWS_AS(make_scale_problem(2, test::data("[1,1.5)", "x")), ShapeError);
    CHECK_THROWS_AS(make_scale_problem(2, test::data("[1,2)u[4,8)", "x")), ShapeError);
    CHECK_THROWS_AS(make_scale_problem(-2, test::data("[1,2)", "x")), ShapeError);
    CHECK_THROWS_AS(make_scale_problem(-2, test::data("(-3,-1]u[1,2)", "x")), ShapeError);
}

TEST_CASE("closures are canonicalised") {
    const auto p = make_scale_problem(2, test::data("[1,2]", "x"));
    CHECK(to_string(p.initial().set()) == "[1,2)");
    CHECK(p.evaluate(2.0) == 1.0);
}

TEST_CASE("evaluate examples") {
    const auto p = make_scale_problem(2, test::data("[1,2)", "x"));
    CHECK(p.evaluate(3.0) == 1.5);
    CHECK(p.evaluate(0.75) == 1.5);
    CHECK(p.evaluate(1.0) == 1.0);
    CHECK(p.evaluate(4.0) == 1.0);
    CHECK_THROWS_AS(p.evaluate(0.0), OutOfDomainError);
    CHECK_THROWS_AS(p.evaluate(-1.0), OutOfDomainError);
    CHECK(p.power_of(3.0) == -1);
    CHECK(p.power_of(0.75) == 1);

    const auto q = make_scale_problem(-2, test::data("(-2,-1]u[1,2)", "x"));
    CHECK(q.evaluate(0.5) == -1.0);
    CHECK(q.evaluate(-0.5) == 1.0);
    CHECK(q.evaluate(3.0) == -1.5);
    CHECK(q.evaluate(-3.0) == 1.5);
    CHECK(q.evaluate(5.0) == 1.25);
    CHECK_THROWS_AS(q.evaluate(0.0), OutOfDomainError);
}

TEST_CASE("maximal domains") {
    CHECK(to_string(make_scale_problem(2, test::data("[1,2)", "x")).max_domain()) == "(0,inf)");
    CHECK(to_string(make_scale_problem(2, test::data("(-2,-1]", "x")).max_domain()) == "(-inf,0)");
    CHECK(to_string(make_scale_problem(2, test::data("(-2,-1]u[1,2)", "x")).max_domain()) ==
          "(-inf,0)u(0,inf)");
    CHECK(to_string(make_scale_problem(-2, test::data("(-2,-1]u[1,2)", "x")).max_domain()) ==
          "(-inf,0)u(0,inf)");
}

TEST_CASE("piecewise table for y = x on [1,2)") {
    const auto p = make_scale_problem(2, test::data("[1,2)", "x"));
    for (int n = -10; n <= 10; ++n) {
        const double lo = std::ldexp(1.0, n);
        for (int j = 0; j < 5; ++j) {
            const double x = lo * (1.0 + j / 5.0);
            CHECK(p.evaluate(x) == std::ldexp(x, -n));
        }
    }
}

TEST_CASE("dyadic blocks tile both sides of eps") {
    const GeometricLadder ladder{0.3, 0.6, 2.0};
    for (int n = 0; n <= 40; ++n) {
        CHECK(ladder.block(n).hi() == ladder.block(n + 1).lo());
        CHECK(ladder.block(-n).lo() == ladder.block(-n - 1).hi());
        CHECK(ladder.block(n).lo_closed());
        CHECK_FALSE(ladder.block(n).hi_closed());
    }
    CHECK(ladder.block(0).lo() == 0.3);
    test::Rng rng(17);
    const auto p = make_scale_problem(2, test::data("[0.3,0.6)", "sin(x)"));
    for (int i = 0; i < 1000; ++i) {
        const double x = 0.3 * std::ldexp(rng.uniform(1.0, 2.0), static_cast<int>(rng.integer(-40, 40)));
        CHECK(ladder.contains(x));
        const long m = p.power_of(x);
        CHECK(p.initial().contains(std::ldexp(x, static_cast<int>(m))));
        CHECK_FALSE(p.initial().contains(std::ldexp(x, static_cast<int>(m + 1))));
        CHECK_FALSE(p.initial().contains(std::ldexp(x, static_cast<int>(m - 1))));
    }
}

TEST_CASE("classify_interval") {
    CHECK(describe(classify_interval(1, 2, 2)) == "well-posed; I_max=(0,inf)");
    CHECK(describe(classify_interval(1, 3, 2)) == "overdetermined; redundant=[2,3)");
    const auto under = classify_interval(1, 1.5, 2);
    REQUIRE(std::holds_alternative<verdict::Underdetermined>(under));
    const auto& ladder = std::get<verdict::Underdetermined>(under).i_max;
    CHECK(ladder.a == 1.0);
    CHECK(ladder.c == 1.5);
    CHECK(ladder.ratio == 2.0);
    // c within 1e-12 of b a still counts as equality
    CHECK(std::holds_alternative<verdict::WellPosed>(classify_interval(1, 2 * (1 + 1e-13), 2)));
    CHECK(std::holds_alternative<verdict::Overdetermined>(classify_interval(1, 2 * (1 + 1e-10), 2)));

    CHECK_THROWS_AS(classify_interval(0, 1, 2), ArgumentError);
    CHECK_THROWS_AS(classify_interval(-1, 1, 2), ArgumentError);
    CHECK_THROWS_AS(classify_interval(2, 2, 2), ArgumentError);
    CHECK_THROWS_AS(classify_interval(2, 1, 2), ArgumentError);
    CHECK_THROWS_AS(classify_interval(1, 2, 1), ArgumentError);
    CHECK_THROWS_AS(classify_interval(1, 2, 0.5), ArgumentError);
}

TEST_CASE("underdetermined gaps are exactly the [1.5 2^n, 2^(n+1)) blocks") {
    const auto under = classify_interval(1, 1.5, 2);
    const auto& ladder = std::get<verdict::Underdetermined>(under).i_max;
    test::Rng rng(23);
    for (int i = 0; i < 2000; ++i) {
        const int n = static_cast<int>(rng.integer(-30, 30));
        const double in_gap = std::ldexp(rng.uniform(1.5, 2.0), n);
        const double in_block = std::ldexp(rng.uniform(1.0, 1.5), n);
        CHECK_FALSE(ladder.contains(in_gap));
        CHECK(ladder.contains(in_block));
    }
    CHECK(ladder.contains(1.0));
    CHECK_FALSE(ladder.contains(1.5));
    CHECK_FALSE(ladder.contains(3.0 * 0.125));
    CHECK_FALSE(ladder.contains(-1.2));
    CHECK_FALSE(ladder.contains(0.0));
}

TEST_CASE("residual and agreement with a step-by-step walk") {
    test::Rng rng(29);
    struct Case {
        double b;
        const char* set;
        const char* fn;
    };
    const Case cases[] = {{2, "[1,2)", "x^2"},
                          {3, "(-6,-2]u[0.5,1.5)", "cos(x)+x"},
                          {2.5, "[0.2,0.5)", "exp(x)"},
                          {-2, "(-2,-1]u[1,2)", "x"},
                          {-3, "(-0.3,-0.1]u[0.1,0.3)", "x^3-x"},
                          {0.25, "[1,4)", "sqrt(x)"}};
    for (const auto& c : cases) {
        const auto p = make_scale_problem(c.b, test::data(c.set, c.fn));
        const Domain dom = p.max_domain();
        int checked = 0;
        while (checked < 1000) {
            const double x = (rng.coin() ? 1 : -1) * std::exp(rng.uniform(-12, 12));
            if (!dom.contains(x)) continue;
            ++checked;
            const double y = p.evaluate(x);
            CHECK(std::fabs(y - p.evaluate(p.b() * x)) <= 1e-9 * (1 + std::fabs(y)));
            CHECK(test::rel_close(y, walk(p.b(), p.initial(), x), 1e-9));
        }
    }
}

TEST_CASE("restriction to the data is exact") {
    const auto p = make_scale_problem(-3, test::data("(-0.3,-0.1]u[0.1,0.3)", "x^3-x"));
    test::Rng rng(31);
    const Expr f = parse_expr("x^3-x");
    for (int i = 0; i < 500; ++i) {
        const double x = rng.uniform(0.1, 0.3) * (rng.coin() ? 1 : -1);
        if (!p.initial().contains(x)) continue;
        CHECK(p.evaluate(x) == f.eval(x));
    }
}
