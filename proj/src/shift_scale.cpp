#include "feq/shift_scale.hpp"

#include <cmath>

#include "feq/detail/tolerance.hpp"
#include "feq/equation.hpp"
#include "feq/errors.hpp"
#include "feq/numfmt.hpp"
#include "feq/penlp.hpp"

namespace feq {

using detail::close_rel;

namespace {

constexpr double kShapeTol = 1e-9;
constexpr double kSlack = 1e-9;

std::string fmt(double v) { return format_real(v); }

}  // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::unit: return "b=1";
        case Regime::above_one: return "b>1";
        case Regime::below_one: return "0<b<1";
        case Regime::minus_one: return "b=-1";
        case Regime::minus_one_to_zero: return "-1<b<0";
        case Regime::below_minus_one: return "b<-1";
    }
    throw InternalError("unknown regime");
}

Regime regime_of(double b) {
    if (b == 0.0) throw ZeroBError();
    if (!std::isfinite(b)) throw ArgumentError("b must be finite");
    if (b == 1.0) return Regime::unit;
    if (b == -1.0) return Regime::minus_one;
    if (b > 1.0) return Regime::above_one;
    if (b > 0.0) return Regime::below_one;
    if (b > -1.0) return Regime::minus_one_to_zero;
    return Regime::below_minus_one;
}

std::optional<double> ShiftScaleProblem::x0_above() const {
    if (above_) return above_->x0();
    return std::nullopt;
}

std::optional<double> ShiftScaleProblem::x0_below() const {
    if (below_) return below_->x0();
    return std::nullopt;
}

ShiftScaleProblem make_problem(double b, const InitialData& initial) {
    const Regime regime = regime_of(b);
    const IntervalUnion& set = initial.set();
    require_penlp(family::ShiftScale{b}, set);

    ShiftScaleProblem p{b, initial};
    std::vector<Interval> canonical;

    switch (regime) {
        case Regime::unit: {
            if (set.size() != 1 || !close_rel(set[0].length(), 1.0, kShapeTol))
                throw ShapeError("b = 1 needs one interval of length 1, [x0,x0+1); got " + to_string(set));
            p.unit_x0_ = set[0].lo();
            canonical.push_back(Interval::closed_open(set[0].lo(), set[0].hi()));
            break;
        }
        case Regime::above_one:
        case Regime::below_one: {
            p.xstar_ = 1.0 / (b - 1.0);
            p.limit_ = b * *p.xstar_;
            const double c = *p.limit_;
            if (set.size() > 2)
                throw ShapeError("at most one initial interval on each side of b x* = " + fmt(c));
            for (const auto& part : set.parts()) {
                const bool above = part.lo() > c;
                // x0 > x* puts b x0 below x0+1 exactly when b < 1.
                const bool lo_is_bx0 = above == (b < 1.0);
                const double x0 = lo_is_bx0 ? part.lo() / b : part.lo() - 1.0;
                const double expected_hi = lo_is_bx0 ? x0 + 1.0 : b * x0;
                if (!close_rel(part.hi(), expected_hi, kShapeTol)) {
                    throw ShapeError("initial interval " + to_string(part) + " is not of the form " +
                                     (lo_is_bx0 ? "[b x0, x0+1)" : "[x0+1, b x0)") + "; with x0 = " + fmt(x0) +
                                     " it would be [" + fmt(part.lo()) + "," + fmt(expected_hi) + ")");
                }
                auto& slot = above ? p.above_ : p.below_;
                if (slot) throw ShapeError("two initial intervals on the same side of b x* = " + fmt(c));
                slot.emplace(x0, b);
                canonical.push_back(Interval::closed_open(part.lo(), part.hi()));
            }
            break;
        }
        case Regime::minus_one: {
            p.xstar_ = -0.5;
            if (set.size() != 1)
                throw ShapeError("b = -1 needs one interval [1/2,h) or (l,1/2]; got " + to_string(set));
            const Interval& part = set[0];
            if (close_rel(part.lo(), 0.5, kShapeTol) && part.hi() > 0.5) {
                p.reflect_edge_ = part.hi();
                canonical.push_back(Interval::closed_open(part.lo(), part.hi()));
            } else if (close_rel(part.hi(), 0.5, kShapeTol) && part.lo() < 0.5) {
                p.reflect_edge_ = part.lo();
                canonical.push_back(Interval::open_closed(part.lo(), part.hi()));
            } else {
                throw ShapeError("b = -1 needs one interval [1/2,h) or (l,1/2]; got " + to_string(set));
            }
            break;
        }
        case Regime::minus_one_to_zero:
        case Regime::below_minus_one: {
            p.xstar_ = 1.0 / (b - 1.0);
            p.limit_ = b * *p.xstar_;
            const double c = *p.limit_;
            const double m = std::fabs(b);
            const bool contracting = regime == Regime::minus_one_to_zero;
            const std::string form = contracting ? "(c-eps, c-|b|eps] u [c+|b|eps, c+eps)"
                                                 : "(c-|b|eps, c-eps] u [c+eps, c+|b|eps)";
            if (set.size() != 2 || !(set[0].hi() < c) || !(set[1].lo() > c))
                throw ShapeError("b < 0 needs " + form + " around c = b x* = " + fmt(c) + "; got " + to_string(set));
            const double outer = set[1].hi() - c;
            const double eps = contracting ? outer : outer / m;
            const double inner = contracting ? m * eps : eps;
            if (!close_rel(set[0].lo(), c - outer, kShapeTol) || !close_rel(set[0].hi(), c - inner, kShapeTol) ||
                !close_rel(set[1].lo(), c + inner, kShapeTol)) {
                throw ShapeError("b < 0 needs " + form + " around c = b x* = " + fmt(c) + "; with eps = " +
                                 fmt(eps) + " that is (" + fmt(c - outer) + "," + fmt(c - inner) + "]u[" +
                                 fmt(c + inner) + "," + fmt(c + outer) + "), got " + to_string(set));
            }
            p.eps_ = eps;
            canonical.push_back(Interval::open_closed(set[0].lo(), set[0].hi()));
            canonical.push_back(Interval::closed_open(set[1].lo(), set[1].hi()));
            break;
        }
    }
    p.initial_ = initial.with_set(IntervalUnion::normalize(canonical));
    return p;
}

double ShiftScaleProblem::slack(double at) const { return kSlack * std::max(1.0, std::fabs(at)); }

ShiftScaleProblem::Resolved ShiftScaleProblem::resolve(double x) const {
    if (!std::isfinite(x)) throw OutOfDomainError(x, "not a finite number");
    if (initial_.contains(x)) return {0, x};
    switch (regime_) {
        case Regime::unit: {
            const double n = std::floor(x - *unit_x0_);
            if (std::fabs(n) > 9.0e15) throw OutOfDomainError(x, "too far from the period cell to reduce exactly");
            return {static_cast<long>(n), x - n};
        }
        case Regime::minus_one: {
            if (!max_domain().contains(x))
                throw OutOfDomainError(x, "outside I_max " + to_string(max_domain()));
            return {1, 1.0 - x};
        }
        case Regime::above_one:
        case Regime::below_one: {
            const double c = *limit_;
            if (x == c) throw OutOfDomainError(x, "b x* is a limit point; y(b x*) is not determined");
            const auto& fam = x > c ? above_ : below_;
            if (!fam) throw OutOfDomainError(x, std::string("no initial data ") + (x > c ? "above" : "below") +
                                                    " b x* = " + fmt(c));
            const long k = fam->locate(x);
            return {k, c + std::pow(b_, static_cast<double>(k)) * (x - c)};
        }
        case Regime::minus_one_to_zero:
        case Regime::below_minus_one: {
            const double c = *limit_;
            const double d = x - c;
            if (d == 0.0) throw OutOfDomainError(x, "b x* is a limit point; y(b x*) is not determined");
            const double m = std::fabs(b_);
            const double inner = regime_ == Regime::minus_one_to_zero ? m * *eps_ : *eps_;
            const double guess = std::round(std::log(inner / std::fabs(d)) / std::log(m));
            if (!std::isfinite(guess) || std::fabs(guess) > 1e6)
                throw OutOfDomainError(x, "iteration exponent is not representable");
            const long g = static_cast<long>(guess);
            long best_k = g;
            double best_dist = INFINITY;
            for (long k : {g, g - 1, g + 1, g - 2, g + 2}) {
                const double t = c + std::pow(b_, static_cast<double>(k)) * d;
                if (initial_.contains(t)) return {k, t};
                const double dist = initial_.set().distance_to(t);
                if (dist < best_dist) {
                    best_dist = dist;
                    best_k = k;
                }
            }
            return {best_k, c + std::pow(b_, static_cast<double>(best_k)) * d};
        }
    }
    throw InternalError("unknown regime");
}

double ShiftScaleProblem::evaluate(double x) const {
    if (initial_.contains(x)) return initial_(x);
    const Resolved r = resolve(x);
    return initial_.near(r.mapped, slack(r.mapped));
}

Domain ShiftScaleProblem::max_domain() const {
    switch (regime_) {
        case Regime::unit: return Domain::real_line();
        case Regime::minus_one: {
            const double e = reflect_edge_;
            const Interval span = e > 0.5 ? Interval::open(1.0 - e, e) : Interval::open(e, 1.0 - e);
            return Domain::bounded(IntervalUnion{span});
        }
        case Regime::above_one:
        case Regime::below_one:
            if (above_ && below_) return Domain::punctured(*limit_);
            if (above_) return Domain::above(*limit_, false);
            return Domain::below(*limit_, false);
        case Regime::minus_one_to_zero:
        case Regime::below_minus_one: return Domain::punctured(*limit_);
    }
    throw InternalError("unknown regime");
}

IterationTrace ShiftScaleProblem::trace(double x) const {
    const Resolved r = resolve(x);
    if (std::labs(r.exponent) > kMaxTraceSteps)
        throw InternalError("trace of " + fmt(x) + " needs " + std::to_string(r.exponent) + " steps, above the cap of " +
                            std::to_string(kMaxTraceSteps));
    IterationTrace t;
    t.exponent = r.exponent;
    t.points.push_back(x);
    const long steps = std::labs(r.exponent);
    switch (regime_) {
        case Regime::unit: {
            const double dir = r.exponent > 0 ? -1.0 : 1.0;
            for (long i = 1; i <= steps; ++i) t.points.push_back(x + dir * static_cast<double>(i));
            break;
        }
        case Regime::minus_one:
            t.center = 0.5;
            if (steps == 1) t.points.push_back(1.0 - x);
            break;
        default: {
            const double c = *limit_;
            t.center = c;
            const double mult = r.exponent > 0 ? b_ : 1.0 / b_;
            double d = x - c;
            for (long i = 1; i <= steps; ++i) {
                d *= mult;
                t.points.push_back(c + d);
            }
            break;
        }
    }
    return t;
}

}  // namespace feq
