#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "feq/initial_data.hpp"
#include "feq/interval.hpp"

namespace feq {

enum class Parity { even, odd };

/// (-a, a), or the whole line when half_width is empty.
struct ParityDomain {
    std::optional<double> half_width;

    static ParityDomain whole() { return {}; }
    static ParityDomain symmetric(double a);

    bool contains(double x) const noexcept;
    Domain as_domain() const;
};

struct ParityReport {
    /// Measure of rep_set intersected with its mirror image.
    double overlap_measure = 0.0;
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    /// Set when representatives overlap; says how the spot check went.
    std::optional<std::string> warning;
};

/// Checks rep_set u (-rep_set) covers the domain (0 must be in rep_set for
/// even data; for odd data y(0) = 0 is forced). Throws CoverageError naming
/// the uncovered part, ShapeError if rep_set leaves the domain. Overlapping
/// representatives are allowed; f(x) = +-f(-x) is spot-checked at 100
/// points of the overlap and the outcome reported as a warning.
ParityReport validate_rep_set(Parity parity, const ParityDomain& domain, const InitialData& initial);

class ParityProblem {
public:
    Parity parity() const noexcept { return parity_; }
    const ParityDomain& domain() const noexcept { return domain_; }
    const InitialData& initial() const noexcept { return initial_; }
    const ParityReport& report() const noexcept { return report_; }

    /// even: f(x) or f(-x); odd: f(x), 0 at 0, or -f(-x).
    double extend(double x) const;

private:
    friend ParityProblem make_parity_problem(Parity parity, const ParityDomain& domain, const InitialData& initial);
    ParityProblem(Parity parity, ParityDomain domain, InitialData initial, ParityReport report)
        : parity_(parity), domain_(domain), initial_(std::move(initial)), report_(std::move(report)) {}

    Parity parity_;
    ParityDomain domain_;
    InitialData initial_;
    ParityReport report_;
};

ParityProblem make_parity_problem(Parity parity, const ParityDomain& domain, const InitialData& initial);

}  // namespace feq
