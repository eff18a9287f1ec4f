#include "feq/equation.hpp"

#include <cmath>

#include "feq/detail/overloaded.hpp"
#include "feq/errors.hpp"
#include "feq/numfmt.hpp"

namespace feq {

using detail::overloaded;

void check_parameters(const EquationSpec& eq) {
    std::visit(overloaded{
                   [](const family::ShiftScale& s) {
                       if (s.b == 0.0) throw ZeroBError();
                       if (!std::isfinite(s.b)) throw ArgumentError("b must be finite");
                   },
                   [](const family::PureScale& s) {
                       if (s.b == 0.0) throw ZeroBError();
                       if (!std::isfinite(s.b)) throw ArgumentError("b must be finite");
                       if (std::fabs(s.b) == 1.0) throw ArgumentError("pure scaling needs |b| != 1");
                   },
                   [](const auto&) {},
               },
               eq);
}

std::string describe(const EquationSpec& eq) {
    return std::visit(overloaded{
                          [](const family::ShiftScale& s) { return "shift-scale b=" + format_real(s.b); },
                          [](const family::PureScale& s) { return "scale b=" + format_real(s.b); },
                          [](const family::EvenParity&) { return std::string("even"); },
                          [](const family::OddParity&) { return std::string("odd"); },
                          [](const family::ThreeTerm&) { return std::string("three-term"); },
                      },
                      eq);
}

}  // namespace feq
