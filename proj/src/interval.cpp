#include "feq/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "feq/errors.hpp"
#include "feq/numfmt.hpp"

namespace feq {

namespace {

std::optional<Interval> make_if_nonempty(double lo, double hi, bool lo_closed, bool hi_closed) {
    if (lo < hi || (lo == hi && lo_closed && hi_closed)) return Interval{lo, hi, lo_closed, hi_closed};
    return std::nullopt;
}

// The part of r lying below `bound` (inclusive iff `closed`).
std::optional<Interval> cut_below(const Interval& r, double bound, bool closed) {
    double hi = r.hi();
    bool hc = r.hi_closed();
    if (bound < hi) {
        hi = bound;
        hc = closed;
    } else if (bound == hi) {
        hc = hc && closed;
    }
    return make_if_nonempty(r.lo(), hi, r.lo_closed(), hc);
}

std::optional<Interval> cut_above(const Interval& r, double bound, bool closed) {
    double lo = r.lo();
    bool lc = r.lo_closed();
    if (bound > lo) {
        lo = bound;
        lc = closed;
    } else if (bound == lo) {
        lc = lc && closed;
    }
    return make_if_nonempty(lo, r.hi(), lc, r.hi_closed());
}

bool starts_before(const Interval& a, const Interval& b) {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    return a.lo_closed() && !b.lo_closed();
}

}  // namespace

Interval::Interval(double lo, double hi, bool lo_closed, bool hi_closed)
    : lo_(lo), hi_(hi), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw ArgumentError("interval endpoints must be finite");
    if (!(lo < hi || (lo == hi && lo_closed && hi_closed)))
        throw ArgumentError("empty interval: lo=" + format_real(lo) + " hi=" + format_real(hi));
}

bool Interval::contains(double x) const noexcept {
    const bool above = lo_closed_ ? x >= lo_ : x > lo_;
    const bool below = hi_closed_ ? x <= hi_ : x < hi_;
    return above && below;
}

bool Interval::closure_contains(double x) const noexcept { return x >= lo_ && x <= hi_; }

double Interval::distance_to(double x) const noexcept {
    if (x < lo_) return lo_ - x;
    if (x > hi_) return x - hi_;
    return 0.0;
}

Interval Interval::reflected() const noexcept {
    // 0.0 - v keeps a reflected 0 positive
    return Interval{0.0 - hi_, 0.0 - lo_, hi_closed_, lo_closed_};
}

std::optional<Interval> intersection(const Interval& a, const Interval& b) {
    double lo;
    bool lc;
    if (a.lo() > b.lo()) {
        lo = a.lo();
        lc = a.lo_closed();
    } else if (a.lo() < b.lo()) {
        lo = b.lo();
        lc = b.lo_closed();
    } else {
        lo = a.lo();
        lc = a.lo_closed() && b.lo_closed();
    }
    double hi;
    bool hc;
    if (a.hi() < b.hi()) {
        hi = a.hi();
        hc = a.hi_closed();
    } else if (a.hi() > b.hi()) {
        hi = b.hi();
        hc = b.hi_closed();
    } else {
        hi = a.hi();
        hc = a.hi_closed() && b.hi_closed();
    }
    return make_if_nonempty(lo, hi, lc, hc);
}

bool intersects(const Interval& a, const Interval& b) { return intersection(a, b).has_value(); }

bool mergeable(const Interval& a, const Interval& b) {
    return a.hi() == b.lo() && (a.hi_closed() != b.lo_closed());
}

// --- IntervalUnion -----------------------------------------------------------

IntervalUnion::IntervalUnion(const Interval& single) : parts_{single} {}

IntervalUnion IntervalUnion::normalize(std::vector<Interval> parts) {
    std::sort(parts.begin(), parts.end(), starts_before);
    IntervalUnion out;
    for (const auto& iv : parts) {
        if (out.parts_.empty()) {
            out.parts_.push_back(iv);
            continue;
        }
        Interval& last = out.parts_.back();
        if (intersects(last, iv))
            throw OverlapError("intervals " + to_string(last) + " and " + to_string(iv) + " overlap");
        if (mergeable(last, iv)) {
            last = Interval{last.lo(), iv.hi(), last.lo_closed(), iv.hi_closed()};
        } else {
            out.parts_.push_back(iv);
        }
    }
    return out;
}

IntervalUnion IntervalUnion::unite(std::vector<Interval> parts) {
    std::sort(parts.begin(), parts.end(), starts_before);
    IntervalUnion out;
    for (const auto& iv : parts) {
        if (out.parts_.empty()) {
            out.parts_.push_back(iv);
            continue;
        }
        Interval& last = out.parts_.back();
        if (intersects(last, iv) || mergeable(last, iv)) {
            double hi = last.hi();
            bool hc = last.hi_closed();
            if (iv.hi() > hi) {
                hi = iv.hi();
                hc = iv.hi_closed();
            } else if (iv.hi() == hi) {
                hc = hc || iv.hi_closed();
            }
            last = Interval{last.lo(), hi, last.lo_closed(), hc};
        } else {
            out.parts_.push_back(iv);
        }
    }
    return out;
}

bool IntervalUnion::contains(double x) const noexcept {
    return std::any_of(parts_.begin(), parts_.end(), [x](const Interval& p) { return p.contains(x); });
}

bool IntervalUnion::closure_contains(double x) const noexcept {
    return std::any_of(parts_.begin(), parts_.end(),
                       [x](const Interval& p) { return p.closure_contains(x); });
}

double IntervalUnion::distance_to(double x) const noexcept {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : parts_) best = std::min(best, p.distance_to(x));
    return best;
}

double IntervalUnion::measure() const noexcept {
    double m = 0.0;
    for (const auto& p : parts_) m += p.length();
    return m;
}

double IntervalUnion::lower() const {
    if (parts_.empty()) throw ArgumentError("empty interval union has no bounds");
    return parts_.front().lo();
}

double IntervalUnion::upper() const {
    if (parts_.empty()) throw ArgumentError("empty interval union has no bounds");
    return parts_.back().hi();
}

IntervalUnion IntervalUnion::reflected() const {
    std::vector<Interval> r;
    r.reserve(parts_.size());
    for (const auto& p : parts_) r.push_back(p.reflected());
    return normalize(std::move(r));
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
    std::vector<Interval> r;
    for (const auto& a : parts_)
        for (const auto& b : other.parts_)
            if (auto c = intersection(a, b)) r.push_back(*c);
    return unite(std::move(r));
}

IntervalUnion IntervalUnion::complement_in(const Interval& whole) const {
    std::vector<Interval> remaining{whole};
    for (const auto& p : parts_) {
        std::vector<Interval> next;
        for (const auto& r : remaining) {
            if (auto left = cut_below(r, p.lo(), !p.lo_closed())) next.push_back(*left);
            if (auto right = cut_above(r, p.hi(), !p.hi_closed())) next.push_back(*right);
        }
        remaining = std::move(next);
    }
    return unite(std::move(remaining));
}

// --- Domain ------------------------------------------------------------------

bool DomainPart::contains(double x) const noexcept {
    const bool above = lo_unbounded || (lo_closed ? x >= lo : x > lo);
    const bool below = hi_unbounded || (hi_closed ? x <= hi : x < hi);
    return above && below;
}

Domain Domain::real_line() {
    DomainPart p;
    p.lo_unbounded = p.hi_unbounded = true;
    return Domain{{p}};
}

Domain Domain::above(double v, bool closed) {
    DomainPart p;
    p.lo = v;
    p.lo_closed = closed;
    p.hi_unbounded = true;
    return Domain{{p}};
}

Domain Domain::below(double v, bool closed) {
    DomainPart p;
    p.hi = v;
    p.hi_closed = closed;
    p.lo_unbounded = true;
    return Domain{{p}};
}

Domain Domain::punctured(double v) {
    Domain lower = below(v, false);
    Domain upper = above(v, false);
    return Domain{{lower.parts_.front(), upper.parts_.front()}};
}

Domain Domain::bounded(const IntervalUnion& u) {
    std::vector<DomainPart> parts;
    for (const auto& iv : u.parts()) {
        DomainPart p;
        p.lo = iv.lo();
        p.hi = iv.hi();
        p.lo_closed = iv.lo_closed();
        p.hi_closed = iv.hi_closed();
        parts.push_back(p);
    }
    return Domain{std::move(parts)};
}

bool Domain::contains(double x) const noexcept {
    return std::any_of(parts_.begin(), parts_.end(), [x](const DomainPart& p) { return p.contains(x); });
}

// --- text --------------------------------------------------------------------

std::string to_string(const Interval& iv) {
    if (iv.is_singleton()) return "{" + format_real(iv.lo()) + "}";
    return std::string(iv.lo_closed() ? "[" : "(") + format_real(iv.lo()) + "," +
           format_real(iv.hi()) + (iv.hi_closed() ? "]" : ")");
}

std::string to_string(const IntervalUnion& u) {
    if (u.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) s += "u";
        s += to_string(u[i]);
    }
    return s;
}

std::string to_string(const DomainPart& p) {
    std::string s = p.lo_unbounded ? "(-inf" : std::string(p.lo_closed ? "[" : "(") + format_real(p.lo);
    s += ",";
    s += p.hi_unbounded ? "inf)" : format_real(p.hi) + (p.hi_closed ? "]" : ")");
    return s;
}

std::string to_string(const Domain& d) {
    if (d.parts().empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < d.parts().size(); ++i) {
        if (i) s += "u";
        s += to_string(d.parts()[i]);
    }
    return s;
}

}  // namespace feq
