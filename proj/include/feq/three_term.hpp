#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "feq/expr.hpp"
#include "feq/initial_data.hpp"
#include "feq/interval.hpp"

namespace feq {

/// IVP for y(3x) = y(x) + y(2x) with data on [eps, 3eps), on (-3delta, -delta],
/// or on both. y(0) = 0 always.
///
/// Above the data interval the forward rule y(x) = y(x/3) + y(2x/3) is
/// applied, below it the backward rule y(x) = y(3x) - y(2x). Every point in
/// a call tree has the form x 2^i / 3^n and is computed from (i, n) in one
/// fixed way, so equal points are bitwise equal and the memo hits.
class ThreeTermProblem {
public:
    struct Stats {
        double value;
        int depth;             // longest chain of rule applications
        std::size_t visited;   // distinct points evaluated
    };

    std::optional<double> epsilon() const noexcept { return eps_; }
    std::optional<double> delta() const noexcept { return delta_; }
    const InitialData& initial() const noexcept { return initial_; }

    /// Throws OutOfDomainError if x's side has no data; RecursionDepthError
    /// past 10^4 nested rule applications.
    double evaluate(double x) const;
    /// The same recursion with no memo table; exponential, for testing.
    double evaluate_uncached(double x) const;
    Stats evaluate_with_stats(double x) const;

    /// [0, inf), (-inf, 0] or the whole line, depending on which sides carry data.
    Domain max_domain() const;

    static constexpr int kMaxDepth = 10000;

private:
    friend ThreeTermProblem make_three_term_problem(const InitialData& initial);
    ThreeTermProblem(InitialData initial, std::optional<double> eps, std::optional<double> delta)
        : initial_(std::move(initial)), eps_(eps), delta_(delta) {}

    InitialData initial_;
    std::optional<double> eps_;
    std::optional<double> delta_;
};

/// Accepts [eps, 3eps), (-3delta, -delta], or both (closures canonicalised;
/// the 3:1 ratio is checked to 1e-9 relative). Throws PenlpViolation if the
/// set's closure reaches 0, ShapeError for any other layout.
ThreeTermProblem make_three_term_problem(const InitialData& initial);

/// C(n, r) exactly; throws ArgumentError for n > 60 or r outside [0, n].
std::uint64_t binomial(int n, int r);

/// sum_{r=0..n} C(n,r) f(2^r x / 3^n): y(x) unrolled n levels through the
/// forward rule, read entirely from f.
double binomial_expand(const std::function<double(double)>& f, double x, int n);
double binomial_expand(const Expr& f, double x, int n);

struct ProbeResult {
    bool consistent;
    double v1;
    double v2;
};

/// Compares binomial_expand at two depths; inconsistent iff
/// |v1 - v2| > tol * (1 + |v1|).
ProbeResult consistency_probe(const Expr& f, double x, int n1, int n2, double tol);

}  // namespace feq
