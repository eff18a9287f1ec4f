#pragma once

#include "feq/interval.hpp"

namespace feq {

/// The interval ladder I_k(x0, b), k in Z, for y(x+1) = y(b x) with b > 0, b != 1.
///
/// With x* = 1/(b-1) and x_k the k-th forward iterate of x0 (negative k runs
/// the backward recurrence), I_k spans b*x_k .. b*x_{k+1} = x_k + 1. Each
/// interval is stored closed-left/open-right whatever the orientation, and
/// neighbours share one computed endpoint, so the ladder tiles its half-line
/// (b x*, inf) or (-inf, b x*) exactly.
class ShiftFamily {
public:
    /// Throws ArgumentError unless b > 0 and b != 1; DegenerateError when
    /// |x0 - x*| <= 1e-12.
    ShiftFamily(double x0, double b);

    double x0() const noexcept { return x0_; }
    double b() const noexcept { return b_; }
    double xstar() const noexcept { return xstar_; }
    /// b x*, the accumulation point of the ladder.
    double limit() const noexcept { return limit_; }
    /// +1 if the ladder lies above b x*, -1 if below.
    int side() const noexcept { return delta_ > 0 ? 1 : -1; }

    /// b * x_j.
    double endpoint(long j) const;
    Interval member(long k) const;
    /// True iff x is strictly on the ladder's side of b x*.
    bool covers(double x) const noexcept;
    /// The unique k with member(k).contains(x). Throws OutOfDomainError.
    long locate(double x) const;

private:
    double x0_;
    double b_;
    double xstar_;
    double limit_;
    double delta_;  // x0 - x*
};

Interval interval_family(double x0, double b, long k);
long locate_index(double x, double x0, double b);

}  // namespace feq
