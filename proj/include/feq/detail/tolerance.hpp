#pragma once

#include <algorithm>
#include <cmath>

namespace feq::detail {

/// |a - b| <= tol * max(1, |a|, |b|).
inline bool close_rel(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace feq::detail
