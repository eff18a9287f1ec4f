#include "feq/oracle.hpp"

#include <cmath>

#include "feq/detail/overloaded.hpp"
#include "feq/errors.hpp"
#include "feq/numfmt.hpp"

namespace feq::oracle {

using detail::overloaded;

double iterate_loop(const AffineMap& m, double x0, long n) {
    if (n < 0) throw ArgumentError("iteration count must be non-negative");
    double x = x0;
    for (long i = 0; i < n; ++i) x = m.slope * x + m.offset;
    return x;
}

namespace {

struct Probe {
    const std::function<double(double)>& y;
    double* scale;

    double operator()(double t) const {
        const double v = y(t);
        if (scale) *scale = std::max(*scale, std::fabs(v));
        return v;
    }
};

double residual(const Probe& y, const EquationSpec& eq, double x) {
    return std::visit(overloaded{
                          [&](const family::ShiftScale& s) { return std::fabs(y(x + 1.0) - y(s.b * x)); },
                          [&](const family::PureScale& s) { return std::fabs(y(x) - y(s.b * x)); },
                          [&](const family::EvenParity&) { return std::fabs(y(x) - y(-x)); },
                          [&](const family::OddParity&) { return std::fabs(y(-x) + y(x)); },
                          [&](const family::ThreeTerm&) { return std::fabs(y(3.0 * x) - y(x) - y(2.0 * x)); },
                      },
                      eq);
}

std::string params(const EquationSpec& eq) {
    return std::visit(overloaded{
                          [](const family::ShiftScale& s) { return "b=" + format_real(s.b); },
                          [](const family::PureScale& s) { return "b=" + format_real(s.b); },
                          [](const auto&) { return std::string(); },
                      },
                      eq);
}

std::string family_name(const EquationSpec& eq) {
    return std::visit(overloaded{
                          [](const family::ShiftScale&) { return "shift-scale"; },
                          [](const family::PureScale&) { return "scale"; },
                          [](const family::EvenParity&) { return "even"; },
                          [](const family::OddParity&) { return "odd"; },
                          [](const family::ThreeTerm&) { return "three-term"; },
                      },
                      eq);
}

}  // namespace

double residual_at(const std::function<double(double)>& y, const EquationSpec& eq, double x) {
    return residual(Probe{y, nullptr}, eq, x);
}

ResidualReport residual_sweep(const std::function<double(double)>& y, const EquationSpec& eq,
                              std::span<const double> grid, double tol) {
    ResidualReport r;
    const Probe probe{y, &r.scale};
    for (double x : grid) {
        double res;
        try {
            res = residual(probe, eq, x);
        } catch (const OutOfDomainError& e) {
            throw OutOfDomainError(x, std::string("residual needs a point outside the domain: ") + e.what());
        }
        ++r.samples;
        if (r.samples == 1 || res > r.max_abs_residual) {
            r.max_abs_residual = res;
            r.argmax_point = x;
        }
    }
    r.within_tolerance = r.max_abs_residual <= tol * (1.0 + r.scale);
    return r;
}

std::string csv_header() { return "family,params,samples,max_abs_residual,argmax_point"; }

std::string csv_row(const EquationSpec& eq, const ResidualReport& r) {
    return family_name(eq) + "," + params(eq) + "," + std::to_string(r.samples) + "," +
           format_real(r.max_abs_residual) + "," + format_real(r.argmax_point);
}

}  // namespace feq::oracle
