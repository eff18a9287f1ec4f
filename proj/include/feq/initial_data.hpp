#pragma once

#include <vector>

#include "feq/expr.hpp"
#include "feq/interval.hpp"

namespace feq {

struct Piece {
    Interval on;
    Expr fn;
};

/// Initial function y0: a set I0 and one expression per sub-interval.
/// Pieces partition the set exactly.
class InitialData {
public:
    /// Throws ShapeError if the pieces do not partition `set`, OverlapError if
    /// two pieces intersect.
    InitialData(IntervalUnion set, std::vector<Piece> pieces);

    /// One expression across every part of `set`.
    static InitialData uniform(IntervalUnion set, const Expr& fn);

    const IntervalUnion& set() const noexcept { return set_; }
    const std::vector<Piece>& pieces() const noexcept { return pieces_; }

    bool contains(double x) const noexcept { return set_.contains(x); }

    /// y0(x); throws OutOfDomainError outside the set.
    double operator()(double x) const;

    /// y0 at a point produced by floating-point iteration. If x misses the set
    /// by at most `slack` (absolute), the nearest piece is used.
    double near(double x, double slack) const;

    /// Same data on a different but equally partitioned set; used when
    /// endpoint closures are canonicalised.
    InitialData with_set(IntervalUnion set) const;

private:
    const Piece* find(double x) const noexcept;

    IntervalUnion set_;
    std::vector<Piece> pieces_;
};

}  // namespace feq
