#include "feq/penlp.hpp"

#include <cmath>

#include "feq/detail/overloaded.hpp"
#include "feq/errors.hpp"
#include "feq/numfmt.hpp"
#include "feq/three_term.hpp"

namespace feq {

using detail::overloaded;

std::vector<double> limit_points(const EquationSpec& eq) {
    return std::visit(overloaded{
                          [](const family::ShiftScale& s) -> std::vector<double> {
                              if (s.b == 1.0 || s.b == -1.0 || s.b == 0.0) return {};
                              return {s.b / (s.b - 1.0)};
                          },
                          [](const family::PureScale&) -> std::vector<double> { return {0.0}; },
                          [](const family::ThreeTerm&) -> std::vector<double> { return {0.0}; },
                          [](const auto&) -> std::vector<double> { return {}; },
                      },
                      eq);
}

PenlpCheck validate_initial_set(const EquationSpec& eq, const IntervalUnion& i0) {
    for (double l : limit_points(eq)) {
        if (i0.closure_contains(l)) return {l};
    }
    return {};
}

void require_penlp(const EquationSpec& eq, const IntervalUnion& i0) {
    if (auto check = validate_initial_set(eq, i0); !check.ok()) throw PenlpViolation(*check.violated);
}

Interval GeometricLadder::block(int n) const {
    const double scale = std::pow(ratio, n);
    Interval b = Interval::closed_open(a * std::fabs(scale), c * std::fabs(scale));
    if (scale < 0) b = b.reflected();
    return mirrored ? b.reflected() : b;
}

bool GeometricLadder::contains(double x) const {
    const double m = std::fabs(x);
    if (!(m > 0) || !std::isfinite(m)) return false;
    const int guess = static_cast<int>(std::floor(std::log(m / a) / std::log(std::fabs(ratio))));
    for (int n : {guess, guess - 1, guess + 1}) {
        if (block(n).contains(x)) return true;
    }
    return false;
}

std::string GeometricLadder::render(int first, int last) const {
    std::string out = "...";
    for (int n = first; n <= last; ++n) out += "u" + to_string(block(n));
    return out + "u...";
}

namespace {

// The multiplier whose powers carry the data interval around: b or 1/b
// (whichever exceeds 1 in size) for pure scaling, 3 for the three-term equation.
double ladder_ratio(const EquationSpec& eq) {
    return std::visit(overloaded{
                          [](const family::PureScale& s) {
                              check_parameters(s);
                              return std::fabs(s.b) > 1.0 ? s.b : 1.0 / s.b;
                          },
                          [](const family::ThreeTerm&) { return 3.0; },
                          [](const auto&) -> double {
                              throw ArgumentError("classification is defined for the scaling and three-term equations only");
                          },
                      },
                      eq);
}

}  // namespace

double well_posed_ratio(const EquationSpec& eq) {
    const double r = ladder_ratio(eq);
    // a negative multiplier alternates sides, so one side is reached every second power
    return r > 0 ? r : r * r;
}

Classification classify(const EquationSpec& eq, const Interval& i0) {
    const double ratio = ladder_ratio(eq);
    const double rho = well_posed_ratio(eq);
    if (i0.closure_contains(0.0)) return verdict::LimitPointViolation{0.0};
    const bool mirrored = i0.hi() < 0.0;
    const double a = mirrored ? -i0.hi() : i0.lo();
    const double c = mirrored ? -i0.lo() : i0.hi();
    if (!(a > 0.0)) throw ArgumentError("classify needs 0 < a");
    if (!(c > a)) throw ArgumentError("classify needs a < c");
    const double target = rho * a;
    if (std::fabs(c - target) <= 1e-12 * target) {
        if (ratio < 0) return verdict::WellPosed{Domain::punctured(0.0)};
        // y(0) = 0 is forced by the three-term equation
        const bool with_zero = std::holds_alternative<family::ThreeTerm>(eq);
        return verdict::WellPosed{mirrored ? Domain::below(0.0, with_zero) : Domain::above(0.0, with_zero)};
    }
    if (c > target) {
        const Interval extra = Interval::closed_open(target, c);
        return verdict::Overdetermined{mirrored ? extra.reflected() : extra};
    }
    return verdict::Underdetermined{GeometricLadder{a, c, ratio, mirrored}};
}

std::string describe(const Classification& c) {
    return std::visit(overloaded{
                          [](const verdict::WellPosed& v) { return "well-posed; I_max=" + to_string(v.i_max); },
                          [](const verdict::Overdetermined& v) {
                              return "overdetermined; redundant=" + to_string(v.redundant);
                          },
                          [](const verdict::Underdetermined& v) {
                              return "underdetermined; I_max=" + v.i_max.render(0, 4);
                          },
                          [](const verdict::LimitPointViolation& v) {
                              return "penlp-violation; limit point=" + format_real(v.limit_point);
                          },
                      },
                      c);
}

namespace {

double witness_value(const EquationSpec& eq, const std::function<double(double)>& y0, double x, int n) {
    if (n < 0) throw ArgumentError("witness depths must be non-negative");
    return std::visit(overloaded{
                          [&](const family::ThreeTerm&) { return binomial_expand(y0, x, n); },
                          [&](const family::PureScale& s) {
                              check_parameters(s);
                              const double big = std::fabs(s.b) > 1.0 ? s.b : 1.0 / s.b;
                              return y0(x * std::pow(big, -n));
                          },
                          [&](const family::ShiftScale& s) {
                              check_parameters(s);
                              if (s.b == 1.0 || s.b == -1.0)
                                  throw ArgumentError("y(x+1) = y(bx) with b = +-1 has no limit point");
                              const double limit = s.b / (s.b - 1.0);
                              const double contract = std::fabs(s.b) < 1.0 ? s.b : 1.0 / s.b;
                              return y0(limit + std::pow(contract, n) * (x - limit));
                          },
                          [](const auto&) -> double {
                              throw ArgumentError("the parity equations have no limit point to witness");
                          },
                      },
                      eq);
}

}  // namespace

WitnessReport constraint_witness(const EquationSpec& eq, const std::function<double(double)>& y0, double x,
                                 std::span<const int> depths, double tol) {
    WitnessReport report;
    for (std::size_t i = 0; i < depths.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (depths[i] == depths[j]) throw ArgumentError("witness depths must be distinct");
        }
    }
    for (int n : depths) report.candidates.push_back({n, witness_value(eq, y0, x, n)});
    const auto& cs = report.candidates;
    for (std::size_t i = 0; i < cs.size() && !report.conflict; ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            if (std::fabs(cs[i].value - cs[j].value) > tol * (1.0 + std::fabs(cs[i].value))) {
                report.conflict = std::pair{i, j};
                break;
            }
        }
    }
    return report;
}

WitnessReport constraint_witness(const EquationSpec& eq, const Expr& y0, double x, std::span<const int> depths,
                                 double tol) {
    return constraint_witness(eq, [&y0](double t) { return y0.eval(t); }, x, depths, tol);
}

}  // namespace feq
