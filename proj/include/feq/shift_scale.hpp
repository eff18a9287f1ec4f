#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feq/family.hpp"
#include "feq/initial_data.hpp"
#include "feq/interval.hpp"

namespace feq {

enum class Regime {
    unit,              // b = 1
    above_one,         // b > 1
    below_one,         // 0 < b < 1
    minus_one,         // b = -1
    minus_one_to_zero, // -1 < b < 0
    below_minus_one,   // b < -1
};

std::string to_string(Regime r);
Regime regime_of(double b);

/// Query point followed by its images under the regime's map, ending in the
/// initial set. `exponent` is the signed step count: positive when the steps
/// apply x -> b x - b (or x -> x - 1 for b = 1), negative for the inverse.
struct IterationTrace {
    std::vector<double> points;
    long exponent = 0;
    /// The point the iterates are measured against: b x* for b != +-1, the
    /// mirror point 1/2 for b = -1, absent for b = 1.
    std::optional<double> center;
};

/// IVP for y(x+1) = y(b x) with its initial data.
///
/// Accepted initial sets, closures canonicalised on construction:
///   b = 1         one interval [x0, x0+1)
///   b > 0         one interval between b x0 and x0+1 on either side of b x*,
///                 or one on each side
///   b = -1        [1/2, h) or (l, 1/2]
///   b < 0         the annulus around c = b x* where the map x -> c + b(x-c)
///                 is a fundamental domain:
///                 -1 < b < 0: (c-eps, c-|b|eps] u [c+|b|eps, c+eps)
///                 b < -1:     (c-|b|eps, c-eps] u [c+eps, c+|b|eps)
class ShiftScaleProblem {
public:
    double b() const noexcept { return b_; }
    Regime regime() const noexcept { return regime_; }
    const InitialData& initial() const noexcept { return initial_; }
    /// 1/(b-1); absent for b = 1.
    std::optional<double> xstar() const noexcept { return xstar_; }
    /// b x*; absent for b = +-1.
    std::optional<double> limit() const noexcept { return limit_; }
    /// x0 of the ladder above / below b x* (b > 0 only).
    std::optional<double> x0_above() const;
    std::optional<double> x0_below() const;
    /// The anchor of b = 1 problems: left end of the period cell.
    std::optional<double> x0_unit() const noexcept { return unit_x0_; }
    /// eps of the annulus (b < 0, b != -1).
    std::optional<double> epsilon() const noexcept { return eps_; }

    /// Value of the unique extension. Throws OutOfDomainError outside
    /// max_domain(); DomainError from the initial function propagates.
    double evaluate(double x) const;
    Domain max_domain() const;
    /// Throws InternalError past 10^4 steps.
    IterationTrace trace(double x) const;

    static constexpr long kMaxTraceSteps = 10000;

private:
    friend ShiftScaleProblem make_problem(double b, const InitialData& initial);
    ShiftScaleProblem(double b, InitialData initial) : b_(b), regime_(regime_of(b)), initial_(std::move(initial)) {}

    struct Resolved {
        long exponent;
        double mapped;
    };
    Resolved resolve(double x) const;
    double slack(double at) const;

    double b_;
    Regime regime_;
    InitialData initial_;
    std::optional<double> xstar_;
    std::optional<double> limit_;
    std::optional<ShiftFamily> above_;
    std::optional<ShiftFamily> below_;
    std::optional<double> unit_x0_;
    std::optional<double> eps_;
    double reflect_edge_ = 0.0;  // b = -1: the endpoint of the set other than 1/2
};

/// Validates b and the initial set. Throws ZeroBError, PenlpViolation (set
/// closure reaches b x*), or ShapeError naming the expected form.
ShiftScaleProblem make_problem(double b, const InitialData& initial);

}  // namespace feq
