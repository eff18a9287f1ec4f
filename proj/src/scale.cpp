#include "feq/scale.hpp"

#include <cmath>

#include "feq/detail/tolerance.hpp"
#include "feq/equation.hpp"
#include "feq/errors.hpp"
#include "feq/numfmt.hpp"

namespace feq {

using detail::close_rel;

namespace {

constexpr double kShapeTol = 1e-9;
constexpr double kSlack = 1e-9;

}  // namespace

ScaleProblem make_scale_problem(double b, const InitialData& initial) {
    check_parameters(family::PureScale{b});
    if (std::fabs(b) < 1.0) b = 1.0 / b;
    const IntervalUnion& set = initial.set();
    require_penlp(family::PureScale{b}, set);

    ScaleProblem p{b, initial};
    const double m = std::fabs(b);
    std::vector<Interval> canonical;
    if (b > 0) {
        for (const auto& part : set.parts()) {
            if (part.lo() > 0) {
                if (p.eps_) throw ShapeError("more than one initial interval on the positive axis");
                if (!close_rel(part.hi(), b * part.lo(), kShapeTol))
                    throw ShapeError("positive initial interval " + to_string(part) + " is not of the form [eps," +
                                     format_real(b) + " eps); use classify for other ratios");
                p.eps_ = part.lo();
                canonical.push_back(Interval::closed_open(part.lo(), part.hi()));
            } else {
                if (p.delta_) throw ShapeError("more than one initial interval on the negative axis");
                if (!close_rel(part.lo(), b * part.hi(), kShapeTol))
                    throw ShapeError("negative initial interval " + to_string(part) + " is not of the form (-" +
                                     format_real(b) + " delta,-delta]; use classify for other ratios");
                p.delta_ = -part.hi();
                canonical.push_back(Interval::open_closed(part.lo(), part.hi()));
            }
        }
    } else {
        const std::string form = "(-" + format_real(m) + " eps,-eps]u[eps," + format_real(m) + " eps)";
        if (set.size() != 2 || !(set[0].hi() < 0) || !(set[1].lo() > 0))
            throw ShapeError("b < -1 needs " + form + "; got " + to_string(set));
        const double eps = set[1].lo();
        if (!close_rel(set[1].hi(), m * eps, kShapeTol) || !close_rel(set[0].hi(), -eps, kShapeTol) ||
            !close_rel(set[0].lo(), -m * eps, kShapeTol))
            throw ShapeError("b < -1 needs " + form + " with eps = " + format_real(eps) + "; got " + to_string(set));
        p.eps_ = eps;
        canonical.push_back(Interval::open_closed(set[0].lo(), set[0].hi()));
        canonical.push_back(Interval::closed_open(set[1].lo(), set[1].hi()));
    }
    p.initial_ = initial.with_set(IntervalUnion::normalize(canonical));
    return p;
}

long ScaleProblem::power_of(double x) const {
    if (!std::isfinite(x)) throw OutOfDomainError(x, "not a finite number");
    if (x == 0.0) throw OutOfDomainError(x, "0 is the limit point; y(0) is not determined");
    if (b_ > 0) {
        if (x > 0 && !eps_) throw OutOfDomainError(x, "no initial data on the positive axis");
        if (x < 0 && !delta_) throw OutOfDomainError(x, "no initial data on the negative axis");
    }
    const double inner = (b_ > 0 && x < 0) ? *delta_ : *eps_;
    const double guess = std::floor(std::log(inner / std::fabs(x)) / std::log(std::fabs(b_))) + 1.0;
    if (!std::isfinite(guess)) throw OutOfDomainError(x, "scaling exponent is not representable");
    const long g = static_cast<long>(guess);
    long best = g;
    double best_dist = INFINITY;
    for (long k : {g, g - 1, g + 1, g - 2, g + 2}) {
        const double t = std::pow(b_, static_cast<double>(k)) * x;
        if (initial_.contains(t)) return k;
        const double d = initial_.set().distance_to(t);
        if (d < best_dist) {
            best_dist = d;
            best = k;
        }
    }
    return best;
}

double ScaleProblem::evaluate(double x) const {
    if (initial_.contains(x)) return initial_(x);
    const double t = std::pow(b_, static_cast<double>(power_of(x))) * x;
    return initial_.near(t, kSlack * std::max(1.0, std::fabs(t)));
}

Domain ScaleProblem::max_domain() const {
    if (b_ < 0 || (eps_ && delta_)) return Domain::punctured(0.0);
    if (eps_) return Domain::above(0.0, false);
    return Domain::below(0.0, false);
}

Classification classify_interval(double a, double c, double b) {
    if (!(b > 1.0) || !std::isfinite(b)) throw ArgumentError("classify_interval needs b > 1");
    if (!(a > 0.0)) throw ArgumentError("classify_interval needs a > 0");
    if (!(c > a) || !std::isfinite(c)) throw ArgumentError("classify_interval needs c > a");
    return classify(family::PureScale{b}, Interval::closed_open(a, c));
}

}  // namespace feq
