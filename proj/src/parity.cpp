#include "feq/parity.hpp"

#include <cmath>

#include "feq/errors.hpp"
#include "feq/numfmt.hpp"

namespace feq {

namespace {

constexpr std::size_t kSpotChecks = 100;
constexpr double kSpotTol = 1e-9;

IntervalUnion covered_by(Parity parity, const IntervalUnion& rep) {
    std::vector<Interval> parts = rep.parts();
    for (const auto& p : rep.parts()) parts.push_back(p.reflected());
    if (parity == Parity::odd) parts.push_back(Interval::point(0.0));
    return IntervalUnion::unite(std::move(parts));
}

// Evenly spaced interior points of u, allotted by length.
std::vector<double> sample(const IntervalUnion& u, std::size_t count) {
    std::vector<double> out;
    const double total = u.measure();
    if (total <= 0) return out;
    for (std::size_t i = 0; i < count; ++i) {
        double s = (static_cast<double>(i) + 0.5) / static_cast<double>(count) * total;
        for (const auto& p : u.parts()) {
            if (s < p.length()) {
                out.push_back(p.lo() + s);
                break;
            }
            s -= p.length();
        }
    }
    return out;
}

}  // namespace

ParityDomain ParityDomain::symmetric(double a) {
    if (!(a > 0) || !std::isfinite(a)) throw ArgumentError("parity domain (-a,a) needs a finite a > 0");
    return ParityDomain{a};
}

bool ParityDomain::contains(double x) const noexcept {
    if (!half_width) return std::isfinite(x);
    return std::fabs(x) < *half_width;
}

Domain ParityDomain::as_domain() const {
    if (!half_width) return Domain::real_line();
    return Domain::bounded(IntervalUnion{Interval::open(-*half_width, *half_width)});
}

ParityReport validate_rep_set(Parity parity, const ParityDomain& domain, const InitialData& initial) {
    const IntervalUnion& rep = initial.set();
    if (domain.half_width) {
        const double a = *domain.half_width;
        for (const auto& p : rep.parts()) {
            const bool low_ok = p.lo() > -a || (p.lo() == -a && !p.lo_closed());
            const bool high_ok = p.hi() < a || (p.hi() == a && !p.hi_closed());
            if (!low_ok || !high_ok)
                throw ShapeError("representative set " + to_string(rep) + " is not inside the domain " +
                                 to_string(domain.as_domain()));
        }
    }
    const IntervalUnion covered = covered_by(parity, rep);
    if (!domain.half_width) {
        const Interval& first = covered.parts().front();
        const Interval& last = covered.parts().back();
        std::vector<DomainPart> tails = Domain::below(first.lo(), !first.lo_closed()).parts();
        const auto upper = Domain::above(last.hi(), !last.hi_closed()).parts();
        tails.insert(tails.end(), upper.begin(), upper.end());
        throw CoverageError(to_string(Domain{tails}) + " (a bounded representative set cannot cover the real line)");
    }
    const double a = *domain.half_width;
    const IntervalUnion gaps = covered.complement_in(Interval::open(-a, a));
    if (!gaps.empty()) throw CoverageError(to_string(gaps));

    ParityReport report;
    const IntervalUnion overlap = rep.intersect(rep.reflected());
    report.overlap_measure = overlap.measure();
    if (report.overlap_measure > 0) {
        const double sign = parity == Parity::even ? 1.0 : -1.0;
        for (double x : sample(overlap, kSpotChecks)) {
            ++report.checked;
            const double fx = initial(x);
            const double fm = initial(-x);
            if (std::fabs(fx - sign * fm) > kSpotTol * (1.0 + std::fabs(fx))) ++report.mismatches;
        }
        report.warning = "representatives overlap on " + to_string(overlap) + "; " +
                         std::to_string(report.mismatches) + " of " + std::to_string(report.checked) +
                         " spot checks of f(x) = " + (parity == Parity::even ? "f(-x)" : "-f(-x)") + " failed";
    }
    return report;
}

ParityProblem make_parity_problem(Parity parity, const ParityDomain& domain, const InitialData& initial) {
    ParityReport report = validate_rep_set(parity, domain, initial);
    return ParityProblem{parity, domain, initial, std::move(report)};
}

double ParityProblem::extend(double x) const {
    if (!domain_.contains(x)) throw OutOfDomainError(x, "outside the domain " + to_string(domain_.as_domain()));
    if (parity_ == Parity::odd && x == 0.0) return 0.0;
    if (initial_.contains(x)) return initial_(x);
    if (!initial_.contains(-x)) throw OutOfDomainError(x, "neither x nor -x is a representative");
    const double mirrored = initial_(-x);
    return parity_ == Parity::even ? mirrored : -mirrored;
}

}  // namespace feq
