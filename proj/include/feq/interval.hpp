#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace feq {

/// A bounded real interval with explicit endpoint closure.
///
/// Either lo < hi, or lo == hi with both ends closed (a singleton). Endpoints
/// are always finite; unbounded sets only appear in reported domains.
class Interval {
public:
    Interval(double lo, double hi, bool lo_closed, bool hi_closed);

    static Interval closed_open(double lo, double hi) { return {lo, hi, true, false}; }
    static Interval open_closed(double lo, double hi) { return {lo, hi, false, true}; }
    static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
    static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
    static Interval point(double v) { return {v, v, true, true}; }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    bool lo_closed() const noexcept { return lo_closed_; }
    bool hi_closed() const noexcept { return hi_closed_; }
    double length() const noexcept { return hi_ - lo_; }
    bool is_singleton() const noexcept { return lo_ == hi_; }

    bool contains(double x) const noexcept;
    bool closure_contains(double x) const noexcept;
    /// Distance from x to the closure; zero inside.
    double distance_to(double x) const noexcept;
    /// The mirror image {-x : x in *this}.
    Interval reflected() const noexcept;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_;
    double hi_;
    bool lo_closed_;
    bool hi_closed_;
};

std::optional<Interval> intersection(const Interval& a, const Interval& b);
bool intersects(const Interval& a, const Interval& b);
/// a ends exactly where b starts and exactly one side owns the shared point.
bool mergeable(const Interval& a, const Interval& b);

/// Canonical finite union: parts disjoint, sorted ascending, never mergeable.
class IntervalUnion {
public:
    IntervalUnion() = default;
    IntervalUnion(const Interval& single);  // NOLINT: implicit on purpose

    /// Sorts and merges adjacent parts. Throws OverlapError when two parts
    /// share any point.
    static IntervalUnion normalize(std::vector<Interval> parts);
    /// Set union; overlapping parts are merged rather than rejected.
    static IntervalUnion unite(std::vector<Interval> parts);

    const std::vector<Interval>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }
    const Interval& operator[](std::size_t i) const { return parts_[i]; }

    bool contains(double x) const noexcept;
    bool closure_contains(double x) const noexcept;
    double distance_to(double x) const noexcept;
    double measure() const noexcept;
    double lower() const;
    double upper() const;

    IntervalUnion reflected() const;
    IntervalUnion intersect(const IntervalUnion& other) const;
    /// whole minus *this.
    IntervalUnion complement_in(const Interval& whole) const;

    friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

private:
    std::vector<Interval> parts_;
};

/// One piece of a reported set; ends may be unbounded.
struct DomainPart {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = false;
    bool hi_closed = false;
    bool lo_unbounded = false;
    bool hi_unbounded = false;

    bool contains(double x) const noexcept;
    friend bool operator==(const DomainPart&, const DomainPart&) = default;
};

/// A union of possibly unbounded intervals, used to report maximal domains.
class Domain {
public:
    Domain() = default;
    explicit Domain(std::vector<DomainPart> parts) : parts_(std::move(parts)) {}

    static Domain real_line();
    static Domain above(double v, bool closed);
    static Domain below(double v, bool closed);
    /// The real line minus one point.
    static Domain punctured(double v);
    static Domain bounded(const IntervalUnion& u);

    const std::vector<DomainPart>& parts() const noexcept { return parts_; }
    bool contains(double x) const noexcept;

    friend bool operator==(const Domain&, const Domain&) = default;

private:
    std::vector<DomainPart> parts_;
};

std::string to_string(const Interval& iv);
std::string to_string(const IntervalUnion& u);
std::string to_string(const DomainPart& p);
std::string to_string(const Domain& d);

/// Parses "[lo,hi)", "(lo,hi]", "(lo,hi)", "[lo,hi]" joined by "u".
/// Endpoints are constant expressions (e.g. "-1/3-1"). Whitespace-tolerant.
/// Throws IntervalSyntaxError (or the expression parser's errors).
IntervalUnion parse_interval_union(std::string_view text);
Interval parse_interval(std::string_view text);

}  // namespace feq
