#include "feq/initial_data.hpp"

#include <algorithm>
#include <limits>

#include "feq/errors.hpp"

namespace feq {

InitialData::InitialData(IntervalUnion set, std::vector<Piece> pieces)
    : set_(std::move(set)), pieces_(std::move(pieces)) {
    if (set_.empty()) throw ShapeError("initial set is empty");
    std::vector<Interval> ivs;
    ivs.reserve(pieces_.size());
    for (const auto& p : pieces_) ivs.push_back(p.on);
    if (IntervalUnion::normalize(ivs) != set_)
        throw ShapeError("initial-function pieces do not partition the initial set " + to_string(set_));
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.on.lo() < b.on.lo(); });
}

InitialData InitialData::uniform(IntervalUnion set, const Expr& fn) {
    std::vector<Piece> pieces;
    for (const auto& part : set.parts()) pieces.push_back(Piece{part, fn});
    return InitialData{std::move(set), std::move(pieces)};
}

const Piece* InitialData::find(double x) const noexcept {
    for (const auto& p : pieces_)
        if (p.on.contains(x)) return &p;
    return nullptr;
}

double InitialData::operator()(double x) const {
    if (const Piece* p = find(x)) return p->fn.eval(x);
    throw OutOfDomainError(x, "not in the initial set " + to_string(set_));
}

double InitialData::near(double x, double slack) const {
    if (const Piece* p = find(x)) return p->fn.eval(x);
    const Piece* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& p : pieces_) {
        const double d = p.on.distance_to(x);
        if (d < best_d) {
            best_d = d;
            best = &p;
        }
    }
    if (best == nullptr || best_d > slack)
        throw OutOfDomainError(x, "iterate missed the initial set " + to_string(set_));
    return best->fn.eval(x);
}

InitialData InitialData::with_set(IntervalUnion set) const {
    if (set.size() != set_.size()) throw InternalError("with_set: part count differs");
    std::vector<Piece> pieces = pieces_;
    for (std::size_t i = 0; i < set.size(); ++i) {
        const Interval& old_part = set_[i];
        const Interval& new_part = set[i];
        if (old_part.lo() != new_part.lo() || old_part.hi() != new_part.hi())
            throw InternalError("with_set: endpoints differ");
        for (auto& p : pieces) {
            bool lc = p.on.lo_closed();
            bool hc = p.on.hi_closed();
            if (p.on.lo() == new_part.lo() && old_part.closure_contains(p.on.lo())) lc = new_part.lo_closed();
            if (p.on.hi() == new_part.hi() && old_part.closure_contains(p.on.hi())) hc = new_part.hi_closed();
            p.on = Interval{p.on.lo(), p.on.hi(), lc, hc};
        }
    }
    return InitialData{std::move(set), std::move(pieces)};
}

}  // namespace feq
