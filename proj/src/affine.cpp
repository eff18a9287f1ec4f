#include "feq/affine.hpp"

#include <cmath>

#include "feq/errors.hpp"

namespace feq {

namespace {

// 1 + s + ... + s^(n-1) for s in (0.5, 1.5).
double geometric_sum(double s, long n) {
    if (s == 1.0) return static_cast<double>(n);
    const double d = s - 1.0;
    // s^n - 1 cancels near s = 1; d is exact there (Sterbenz).
    return std::expm1(static_cast<double>(n) * std::log1p(d)) / d;
}

}  // namespace

std::optional<double> AffineMap::fixed_point() const noexcept {
    if (slope == 1.0) return std::nullopt;
    return offset / (1.0 - slope);
}

double AffineMap::iterate(double x0, long n) const {
    if (n < 0) throw ArgumentError("iterate requires n >= 0");
    if (n == 0) return x0;
    if (slope == 1.0) return x0 + static_cast<double>(n) * offset;
    if (std::fabs(1.0 - slope) < 0.5) {
        // The fixed point is far away here; stay with the geometric sum.
        return std::pow(slope, static_cast<double>(n)) * x0 + offset * geometric_sum(slope, n);
    }
    const double p = offset / (1.0 - slope);
    return std::pow(slope, static_cast<double>(n)) * (x0 - p) + p;
}

AffineMap AffineMap::inverse() const {
    if (slope == 0.0) throw ArgumentError("constant map has no inverse");
    return AffineMap{1.0 / slope, -offset / slope};
}

AffineMap forward_map(double b) {
    if (b == 0.0) throw ZeroBError();
    return AffineMap{1.0 / b, 1.0 / b};
}

AffineMap backward_map(double b) {
    if (b == 0.0) throw ZeroBError();
    return AffineMap{b, -1.0};
}

AffineMap clockwise_map(double b) {
    if (b == 0.0) throw ZeroBError();
    return AffineMap{b, -b};
}

AffineMap counterclockwise_map(double b) {
    if (b == 0.0) throw ZeroBError();
    return AffineMap{1.0 / b, 1.0};
}

std::optional<double> intersection_abscissa(double b) {
    if (b == 1.0) return std::nullopt;
    return 1.0 / (b - 1.0);
}

std::optional<double> limit_point_of(double b) {
    if (b == 1.0) return std::nullopt;
    return b / (b - 1.0);
}

}  // namespace feq
