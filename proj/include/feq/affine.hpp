#pragma once

#include <optional>

namespace feq {

/// x -> slope * x + offset.
struct AffineMap {
    double slope = 1.0;
    double offset = 0.0;

    constexpr double operator()(double x) const noexcept { return slope * x + offset; }

    /// offset / (1 - slope), or nullopt for a pure translation.
    std::optional<double> fixed_point() const noexcept;

    /// n-fold application in closed form, n >= 0: slope^n (x0 - p) + p with
    /// p the fixed point, x0 + n*offset for a translation. For slope near 1
    /// the equivalent slope^n x0 + offset (1 + slope + ... + slope^(n-1)) is
    /// used instead, since p is huge there.
    double iterate(double x0, long n) const;

    /// The inverse map; slope must be nonzero.
    AffineMap inverse() const;

    friend constexpr bool operator==(const AffineMap&, const AffineMap&) = default;
};

// The four recurrences generated by y(x+1) = y(b x).

/// x_{n+1} = x_n / b + 1 / b, fixed point x* = 1/(b-1).
AffineMap forward_map(double b);
/// x_{n+1} = b x_n - 1, fixed point x*.
AffineMap backward_map(double b);
/// x_{n+1} = b x_n - b, fixed point b x*.  Encodes y(x) = y(b(x-1)).
AffineMap clockwise_map(double b);
/// x_{n+1} = x_n / b + 1, fixed point b x*.  Encodes y(x) = y(x/b + 1).
AffineMap counterclockwise_map(double b);

/// 1/(b-1); nullopt for b == 1.
std::optional<double> intersection_abscissa(double b);
/// b/(b-1); nullopt for b == 1.
std::optional<double> limit_point_of(double b);

}  // namespace feq
