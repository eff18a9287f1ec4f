#pragma once

#include <string>
#include <variant>

namespace feq {

namespace family {

/// y(x+1) = y(b x), b != 0.
struct ShiftScale {
    double b;
};
/// y(x) = y(b x), |b| != 0, 1.
struct PureScale {
    double b;
};
/// y(x) = y(-x).
struct EvenParity {};
/// y(-x) = -y(x).
struct OddParity {};
/// y(3x) = y(x) + y(2x).
struct ThreeTerm {};

}  // namespace family

using EquationSpec =
    std::variant<family::ShiftScale, family::PureScale, family::EvenParity, family::OddParity, family::ThreeTerm>;

/// Throws ZeroBError / ArgumentError on invalid family parameters.
void check_parameters(const EquationSpec& eq);

/// "shift-scale b=0.5", "three-term", ...
std::string describe(const EquationSpec& eq);

}  // namespace feq
