#pragma once

#include <optional>

#include "feq/initial_data.hpp"
#include "feq/interval.hpp"
#include "feq/penlp.hpp"

namespace feq {

/// IVP for y(x) = y(b x), |b| > 1 after normalisation.
///
/// b > 1:  data on [eps, b eps), on (-b delta, -delta], or on both.
/// b < -1: data on (-|b| eps, -eps] u [eps, |b| eps).
class ScaleProblem {
public:
    /// The normalised parameter, |b| > 1.
    double b() const noexcept { return b_; }
    const InitialData& initial() const noexcept { return initial_; }
    std::optional<double> epsilon() const noexcept { return eps_; }
    std::optional<double> delta() const noexcept { return delta_; }

    /// The integer m with b^m x in the initial set. Throws OutOfDomainError
    /// for x = 0 or an uncovered side.
    long power_of(double x) const;
    /// y0(b^m x).
    double evaluate(double x) const;
    Domain max_domain() const;

private:
    friend ScaleProblem make_scale_problem(double b, const InitialData& initial);
    ScaleProblem(double b, InitialData initial) : b_(b), initial_(std::move(initial)) {}

    double b_;
    InitialData initial_;
    std::optional<double> eps_;
    std::optional<double> delta_;
};

/// |b| < 1 is replaced by 1/b. Throws ZeroBError / ArgumentError for b = 0
/// or |b| = 1, PenlpViolation if the set's closure reaches 0, ShapeError
/// for any other layout.
ScaleProblem make_scale_problem(double b, const InitialData& initial);

/// Verdict for data on [a, c) under y(x) = y(b x). Throws ArgumentError
/// unless 0 < a < c and b > 1.
Classification classify_interval(double a, double c, double b);

}  // namespace feq
