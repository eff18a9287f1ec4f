#include "feq/family.hpp"

#include <algorithm>
#include <cmath>

#include "feq/errors.hpp"
#include "feq/numfmt.hpp"

namespace feq {

ShiftFamily::ShiftFamily(double x0, double b) : x0_(x0), b_(b) {
    if (!(b > 0.0) || b == 1.0) throw ArgumentError("interval ladder needs b > 0 and b != 1, got " + format_real(b));
    xstar_ = 1.0 / (b - 1.0);
    limit_ = b * xstar_;
    delta_ = x0 - xstar_;
    if (std::fabs(delta_) <= 1e-12)
        throw DegenerateError("x0 = " + format_real(x0) + " coincides with x* = " + format_real(xstar_));
}

double ShiftFamily::endpoint(long j) const {
    if (j == 0) return b_ * x0_;
    if (j == 1) return x0_ + 1.0;
    return limit_ + std::pow(b_, static_cast<double>(1 - j)) * delta_;
}

Interval ShiftFamily::member(long k) const {
    const double a = endpoint(k);
    const double c = endpoint(k + 1);
    return a < c ? Interval::closed_open(a, c) : Interval::closed_open(c, a);
}

bool ShiftFamily::covers(double x) const noexcept {
    return delta_ > 0 ? x > limit_ : x < limit_;
}

long ShiftFamily::locate(double x) const {
    if (!covers(x))
        throw OutOfDomainError(x, "not strictly on the ladder side of the limit point " + format_real(limit_));
    // endpoint(j) - limit = b^(-j) * b * delta, so j = -log(r) / log(b).
    const double r = (x - limit_) / (b_ * delta_);
    const double j = -std::log(r) / std::log(b_);
    if (!std::isfinite(j)) throw OutOfDomainError(x, "ladder index is not representable");
    const long guess = static_cast<long>(std::floor(j));
    for (long k : {guess, guess - 1, guess + 1, guess - 2, guess + 2}) {
        // compared directly: members near the limit can round to empty
        const double a = endpoint(k);
        const double c = endpoint(k + 1);
        if (std::min(a, c) <= x && x < std::max(a, c)) return k;
    }
    throw OutOfDomainError(x, "no ladder interval contains the point");
}

Interval interval_family(double x0, double b, long k) { return ShiftFamily{x0, b}.member(k); }

long locate_index(double x, double x0, double b) { return ShiftFamily{x0, b}.locate(x); }

}  // namespace feq
