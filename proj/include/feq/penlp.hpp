#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "feq/equation.hpp"
#include "feq/expr.hpp"
#include "feq/interval.hpp"

namespace feq {

/// Points on which the equation's iteration chains accumulate: b/(b-1) for
/// y(x+1) = y(bx) with b != +-1, 0 for the scaling and three-term
/// equations, none for the parity equations.
std::vector<double> limit_points(const EquationSpec& eq);

struct PenlpCheck {
    std::optional<double> violated;  // first limit point in the closure, if any
    bool ok() const noexcept { return !violated; }
};

/// An initial set is admissible iff no limit point lies in its closure, i.e.
/// some neighbourhood of every limit point misses the set.
PenlpCheck validate_initial_set(const EquationSpec& eq, const IntervalUnion& i0);

/// Throws PenlpViolation when validate_initial_set fails.
void require_penlp(const EquationSpec& eq, const IntervalUnion& i0);

/// Blocks ratio^n [a, c), n in Z, |ratio| > 1; a negative ratio puts odd
/// blocks on the other side of 0. Mirrored when the data sits on the
/// negative axis.
struct GeometricLadder {
    double a;
    double c;
    double ratio;
    bool mirrored = false;

    Interval block(int n) const;
    bool contains(double x) const;
    std::string render(int first, int last) const;
};

namespace verdict {

struct WellPosed {
    Domain i_max;
};
struct Overdetermined {
    Interval redundant;
};
struct Underdetermined {
    GeometricLadder i_max;
};
struct LimitPointViolation {
    double limit_point;
};

}  // namespace verdict

using Classification = std::variant<verdict::WellPosed, verdict::Overdetermined, verdict::Underdetermined,
                                    verdict::LimitPointViolation>;

/// Length ratio c/a that makes [a, c) well posed: |b| (or 1/|b|) for pure
/// scaling with b > 0, b^2 (or 1/b^2) for b < 0, 3 for the three-term
/// equation. Other families throw ArgumentError.
double well_posed_ratio(const EquationSpec& eq);

/// Classifies initial data on one interval [a, c) with 0 < a < c, or its
/// mirror on the negative axis. Equality c == ratio*a is tested to 1e-12
/// relative.
Classification classify(const EquationSpec& eq, const Interval& i0);

/// "well-posed; I_max=[0,inf)", "overdetermined; redundant=[2,3)", ...
std::string describe(const Classification& c);

struct WitnessCandidate {
    int depth;
    double value;
};

struct WitnessReport {
    std::vector<WitnessCandidate> candidates;
    /// Indices into `candidates` of the first disagreeing pair.
    std::optional<std::pair<std::size_t, std::size_t>> conflict;
    bool consistent() const noexcept { return !conflict; }
};

/// Computes y(x) once per depth along the chain that accumulates at the
/// equation's limit point, reading y0 only:
///   three-term:  sum_r C(n,r) y0(2^r x / 3^n)
///   pure scale:  y0(x / b^n)              (|b| > 1 orientation)
///   shift-scale: y0(b x* + s^n (x - b x*)), s = b or 1/b, whichever contracts
/// Candidates are consistent when every pair agrees to tol*(1+|v_i|).
WitnessReport constraint_witness(const EquationSpec& eq, const std::function<double(double)>& y0, double x,
                                 std::span<const int> depths, double tol);
WitnessReport constraint_witness(const EquationSpec& eq, const Expr& y0, double x, std::span<const int> depths,
                                 double tol);

}  // namespace feq
