#include <doctest.h>

#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <variant>
#include <vector>

#include "feq/errors.hpp"
#include "feq/penlp.hpp"
#include "feq/scale.hpp"
#include "feq/shift_scale.hpp"
#include "support.hpp"

using namespace feq;

namespace {

using Q = boost::rational<std::int64_t>;

double to_double(Q q) { return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator()); }

template <class V>
bool holds(const Classification& c) {
    return std::holds_alternative<V>(c);
}

}  // namespace

TEST_CASE("limit points") {
    CHECK(limit_points(family::ShiftScale{2}) == std::vector<double>{2.0});
    CHECK(limit_points(family::ShiftScale{1}).empty());
    CHECK(limit_points(family::ShiftScale{-1}).empty());
    CHECK(limit_points(family::PureScale{2}) == std::vector<double>{0.0});
    CHECK(limit_points(family::ThreeTerm{}) == std::vector<double>{0.0});
    CHECK(limit_points(family::EvenParity{}).empty());
    CHECK(limit_points(family::OddParity{}).empty());
}

TEST_CASE("limit points are fixed by the clockwise map") {
    for (Q b : {Q(-3), Q(-2), Q(-1, 2), Q(1, 2), Q(2), Q(3)}) {
        const Q l = b / (b - Q(1));
        CHECK(b * l - b == l);
        const double got = limit_points(family::ShiftScale{to_double(b)}).front();
        CHECK(got == doctest::Approx(to_double(l)).epsilon(1e-15));
    }
}

TEST_CASE("validate_initial_set") {
    const auto bad = validate_initial_set(family::PureScale{2}, parse_interval_union("(-0.5,0.5)"));
    REQUIRE_FALSE(bad.ok());
    CHECK(*bad.violated == 0.0);
    CHECK(validate_initial_set(family::PureScale{2}, parse_interval_union("[1,2)")).ok());
    // touching the limit point only in the closure still violates
    const auto touch = validate_initial_set(family::ShiftScale{-0.5}, parse_interval_union("(1/3,1)"));
    REQUIRE_FALSE(touch.ok());
    CHECK(*touch.violated == doctest::Approx(1.0 / 3));
    CHECK(validate_initial_set(family::ShiftScale{1}, parse_interval_union("[0,1)")).ok());
    CHECK(validate_initial_set(family::EvenParity{}, parse_interval_union("[0,1)")).ok());
    CHECK_FALSE(validate_initial_set(family::ThreeTerm{}, parse_interval_union("(-1,0)")).ok());
    CHECK_THROWS_AS(require_penlp(family::ThreeTerm{}, parse_interval_union("(0,3)")), PenlpViolation);
    try {
        require_penlp(family::ShiftScale{2}, parse_interval_union("[1,2]"));
        FAIL("expected a violation");
    } catch (const PenlpViolation& e) {
        CHECK(e.limit_point() == 2.0);
    }
}

TEST_CASE("classify examples") {
    CHECK(describe(classify(family::ThreeTerm{}, Interval::closed_open(1, 3))) == "well-posed; I_max=[0,inf)");
    CHECK(describe(classify(family::ThreeTerm{}, Interval::closed_open(1, 4))) == "overdetermined; redundant=[3,4)");
    const auto under = classify(family::ThreeTerm{}, Interval::closed_open(1, 2));
    REQUIRE(holds<verdict::Underdetermined>(under));
    CHECK(describe(under) == "underdetermined; I_max=...u[1,2)u[3,6)u[9,18)u[27,54)u[81,162)u...");
    CHECK(describe(classify(family::ThreeTerm{}, Interval::open_closed(-3, -1))) == "well-posed; I_max=(-inf,0]");
    CHECK(describe(classify(family::ThreeTerm{}, Interval::closed_open(-1, 2))) == "penlp-violation; limit point=0");
    CHECK(holds<verdict::LimitPointViolation>(classify(family::PureScale{2}, Interval::open(0, 1))));

    CHECK(describe(classify(family::PureScale{0.5}, Interval::closed_open(1, 2))) == "well-posed; I_max=(0,inf)");
    CHECK(describe(classify(family::PureScale{-2}, Interval::closed_open(1, 4))) ==
          "well-posed; I_max=(-inf,0)u(0,inf)");
    CHECK(describe(classify(family::PureScale{-2}, Interval::closed_open(1, 3))) ==
          "underdetermined; I_max=...u[1,3)u(-6,-2]u[4,12)u(-24,-8]u[16,48)u...");

    CHECK_THROWS_AS(classify(family::ShiftScale{2}, Interval::closed_open(1, 2)), ArgumentError);
    CHECK_THROWS_AS(classify(family::OddParity{}, Interval::closed_open(1, 2)), ArgumentError);
    CHECK(well_posed_ratio(family::PureScale{0.25}) == 4.0);
    CHECK(well_posed_ratio(family::PureScale{-3}) == 9.0);
    CHECK(well_posed_ratio(family::ThreeTerm{}) == 3.0);
}

TEST_CASE("a negative multiplier's ladder alternates sides") {
    const GeometricLadder ladder{1, 3, -2};
    CHECK(ladder.block(1) == Interval::open_closed(-6, -2));
    CHECK(ladder.block(2) == Interval::closed_open(4, 12));
    CHECK(ladder.block(-1) == Interval::open_closed(-1.5, -0.5));
    CHECK(ladder.contains(-2.5));
    CHECK_FALSE(ladder.contains(-1.25 * 0.5 * 3));
    CHECK_FALSE(ladder.contains(3.5));
    CHECK(ladder.contains(0.25));
}

TEST_CASE("classification is scale-equivariant") {
    test::Rng rng(71);
    const EquationSpec eqs[] = {family::ThreeTerm{}, family::PureScale{2}, family::PureScale{-2.5},
                                family::PureScale{0.3}};
    for (const auto& eq : eqs) {
        const double rho = well_posed_ratio(eq);
        for (int i = 0; i < 300; ++i) {
            const double a = rng.uniform(0.1, 10);
            const double c = a * (rng.integer(0, 2) == 0 ? rho : rng.uniform(1.01, 2 * rho));
            const double lambda = std::exp(rng.uniform(-8, 8));
            const auto base = classify(eq, Interval::closed_open(a, c));
            const auto scaled = classify(eq, Interval::closed_open(lambda * a, lambda * c));
            CHECK(base.index() == scaled.index());
            const auto mirrored = classify(eq, Interval::open_closed(-c, -a));
            CHECK(base.index() == mirrored.index());
        }
    }
}

TEST_CASE("constraint witness examples") {
    const int one_two[] = {1, 2};
    const auto sq = constraint_witness(family::ThreeTerm{}, parse_expr("x^2"), 1.2, one_two, 1e-9);
    REQUIRE(sq.candidates.size() == 2);
    CHECK_FALSE(sq.consistent());
    CHECK(sq.conflict == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(sq.candidates[0].depth == 1);
    CHECK(sq.candidates[0].value == doctest::Approx(0.80).epsilon(1e-15));
    CHECK(sq.candidates[1].value == doctest::Approx(4.0 / 9).epsilon(1e-15));

    const int deep[] = {3, 4, 5};
    const auto flat = constraint_witness(family::PureScale{2}, parse_expr("7"), 5, deep, 1e-9);
    CHECK(flat.consistent());
    for (const auto& c : flat.candidates) CHECK(c.value == 7.0);

    const int three[] = {1, 2, 3};
    const auto lin = constraint_witness(family::ThreeTerm{}, parse_expr("2*x"), 1.2, three, 1e-9);
    CHECK(lin.consistent());
    for (const auto& c : lin.candidates) CHECK(c.value == doctest::Approx(2.4).epsilon(1e-14));

    // pure scaling reads y0 at x 2^-n
    const int two_three[] = {2, 3};
    const auto s = constraint_witness(family::PureScale{2}, parse_expr("x"), 5, two_three, 1e-9);
    CHECK(s.candidates[0].value == 1.25);
    CHECK(s.candidates[1].value == 0.625);
    CHECK_FALSE(s.consistent());

    // shift-scale contracts towards b x* = 2 for b = 2 via x -> (x - 2)/2 + 2
    const int one_three[] = {1, 3};
    const auto ss = constraint_witness(family::ShiftScale{2}, parse_expr("x"), 6, one_three, 1e-9);
    CHECK(ss.candidates[0].value == 4.0);
    CHECK(ss.candidates[1].value == 2.5);

    const int dup[] = {2, 2};
    CHECK_THROWS_AS(constraint_witness(family::ThreeTerm{}, parse_expr("x"), 1, dup, 1e-9), ArgumentError);
    CHECK_THROWS_AS(constraint_witness(family::EvenParity{}, parse_expr("x"), 1, one_two, 1e-9), ArgumentError);
}

TEST_CASE("the first conflicting pair is reported") {
    const int depths[] = {1, 3, 2};
    const auto r = constraint_witness(
        family::PureScale{2}, [](double x) { return x < 1 ? 1.0 : 0.0; }, 3.5, depths, 1e-9);
    // candidates: y0(1.75) = 0, y0(0.4375) = 1, y0(0.875) = 1
    REQUIRE(r.conflict.has_value());
    CHECK(r.conflict->first == 0);
    CHECK(r.conflict->second == 1);
}

TEST_CASE("linear data is consistent at every depth") {
    test::Rng rng(73);
    std::vector<int> depths;
    for (int d = 1; d <= 10; ++d) depths.push_back(d);
    for (int i = 0; i < 50; ++i) {
        const double x = rng.uniform(0, 10);
        const double m = rng.uniform(-5, 5);
        const auto r = constraint_witness(
            family::ThreeTerm{}, [m](double t) { return m * t; }, x, depths, 1e-9);
        CHECK(r.consistent());
        for (const auto& c : r.candidates) CHECK(test::rel_close(c.value, m * x, 1e-12));
    }
}

TEST_CASE("admissible data keeps iterates away from the limit point") {
    test::Rng rng(79);
    struct Case {
        double b;
        const char* set;
    };
    const Case cases[] = {{0.5, "[0.75,2.5)"}, {2, "[6,10)"}, {0.8, "[-8,-7.2)"}, {-0.5, "(-2/3,-1/6]u[5/6,4/3)"},
                          {-2, "(-4/3,-1/3]u[5/3,8/3)"}};
    for (const auto& c : cases) {
        const auto p = make_problem(c.b, test::data(c.set, "x"));
        const double l = *p.limit();
        const double gap = p.initial().set().distance_to(l);
        REQUIRE(gap > 0);
        int checked = 0;
        while (checked < 100) {
            const double x = l + (rng.coin() ? 1 : -1) * std::exp(rng.uniform(std::log(gap / 2), std::log(50.0)));
            if (!p.max_domain().contains(x)) continue;
            ++checked;
            for (double t : p.trace(x).points) CHECK(std::fabs(t - l) >= gap / 2);
        }
    }
    const auto s = make_scale_problem(2, test::data("[0.5,1)", "x"));
    for (int i = 0; i < 100; ++i) {
        const double x = std::exp(rng.uniform(std::log(0.25), std::log(1e6)));
        const double t = std::ldexp(x, static_cast<int>(s.power_of(x)));
        CHECK(t >= 0.25);
    }
}
