#include "feq/three_term.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_map>
#include <vector>

#include "feq/detail/tolerance.hpp"
#include "feq/equation.hpp"
#include "feq/errors.hpp"
#include "feq/numfmt.hpp"
#include "feq/penlp.hpp"

namespace feq {

using detail::close_rel;

namespace {

constexpr double kShapeTol = 1e-9;

__extension__ using u128 = unsigned __int128;

// 3^k for every exponent a depth-capped chain can reach; long double keeps
// them finite.
const std::vector<long double>& powers_of_three() {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(ThreeTermProblem::kMaxDepth + 2, 1.0L);
        for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] * 3.0L;
        return t;
    }();
    return table;
}

// x 2^i 3^-n, computed one way only.
double lattice_point(double x, int i, int n) {
    const long double p3 = powers_of_three()[static_cast<std::size_t>(std::abs(n))];
    const long double scaled = std::ldexp(static_cast<long double>(x), i);
    return static_cast<double>(n >= 0 ? scaled / p3 : scaled * p3);
}

class Evaluator {
public:
    Evaluator(const InitialData& data, double root, double inner, double outer, bool memo)
        : data_(data), root_(root), memo_(memo) {
        const double m = std::fabs(root);
        forward_ = m >= outer;
        inner_ = inner;
        outer_ = outer;
        slack_ = 1e-9 * outer;
    }

    double run() { return value(0, 0, 0); }

    int depth() const noexcept { return max_depth_; }
    std::size_t visited() const noexcept { return visited_; }

private:
    double value(int i, int n, int depth) {
        if (depth > ThreeTermProblem::kMaxDepth)
            throw RecursionDepthError("three-term recursion exceeded " +
                                      std::to_string(ThreeTermProblem::kMaxDepth) + " levels");
        max_depth_ = std::max(max_depth_, depth);
        const double p = lattice_point(root_, i, n);
        if (memo_) {
            if (auto it = cache_.find(p); it != cache_.end()) return it->second;
        }
        ++visited_;
        double v;
        const double m = std::fabs(p);
        if (forward_ ? m < outer_ : m >= inner_) {
            v = data_.near(p, slack_);
        } else if (forward_) {
            v = value(i, n + 1, depth + 1) + value(i + 1, n + 1, depth + 1);
        } else {
            v = value(i, n - 1, depth + 1) - value(i + 1, n, depth + 1);
        }
        if (memo_) cache_.emplace(p, v);
        return v;
    }

    const InitialData& data_;
    double root_;
    bool memo_;
    bool forward_ = false;
    double inner_ = 0.0;
    double outer_ = 0.0;
    double slack_ = 0.0;
    int max_depth_ = 0;
    std::size_t visited_ = 0;
    std::unordered_map<double, double> cache_;
};

ThreeTermProblem::Stats run(const ThreeTermProblem& p, double x, bool memo) {
    if (!std::isfinite(x)) throw OutOfDomainError(x, "not a finite number");
    if (x == 0.0) return {0.0, 0, 1};
    if (p.initial().contains(x)) return {p.initial()(x), 0, 1};
    const std::optional<double> scale = x > 0 ? p.epsilon() : p.delta();
    if (!scale) throw OutOfDomainError(x, x > 0 ? "no data on the positive axis" : "no data on the negative axis");
    Evaluator ev(p.initial(), x, *scale, 3.0 * *scale, memo);
    const double v = ev.run();
    return {v, ev.depth(), ev.visited()};
}

}  // namespace

double ThreeTermProblem::evaluate(double x) const { return run(*this, x, true).value; }

double ThreeTermProblem::evaluate_uncached(double x) const { return run(*this, x, false).value; }

ThreeTermProblem::Stats ThreeTermProblem::evaluate_with_stats(double x) const { return run(*this, x, true); }

Domain ThreeTermProblem::max_domain() const {
    if (eps_ && delta_) return Domain::real_line();
    if (eps_) return Domain::above(0.0, true);
    return Domain::below(0.0, true);
}

ThreeTermProblem make_three_term_problem(const InitialData& initial) {
    const IntervalUnion& set = initial.set();
    require_penlp(family::ThreeTerm{}, set);
    std::optional<double> eps;
    std::optional<double> delta;
    std::vector<Interval> canonical;
    for (const auto& part : set.parts()) {
        if (part.lo() > 0) {
            if (eps) throw ShapeError("more than one data interval on the positive axis; expected [eps,3eps)");
            if (!close_rel(part.hi(), 3.0 * part.lo(), kShapeTol))
                throw ShapeError("positive data interval " + to_string(part) +
                                 " is not of the form [eps,3eps); use classify for other ratios");
            eps = part.lo();
            canonical.push_back(Interval::closed_open(part.lo(), part.hi()));
        } else {
            if (delta) throw ShapeError("more than one data interval on the negative axis; expected (-3delta,-delta]");
            if (!close_rel(-part.lo(), -3.0 * part.hi(), kShapeTol))
                throw ShapeError("negative data interval " + to_string(part) +
                                 " is not of the form (-3delta,-delta]; use classify for other ratios");
            delta = -part.hi();
            canonical.push_back(Interval::open_closed(part.lo(), part.hi()));
        }
    }
    return ThreeTermProblem{initial.with_set(IntervalUnion::normalize(canonical)), eps, delta};
}

std::uint64_t binomial(int n, int r) {
    if (n < 0 || n > 60) throw ArgumentError("binomial coefficients are supported for 0 <= n <= 60");
    if (r < 0 || r > n) throw ArgumentError("binomial index r out of range");
    r = std::min(r, n - r);
    u128 c = 1;
    for (int k = 0; k < r; ++k) {
        c = c * static_cast<unsigned>(n - k) / static_cast<unsigned>(k + 1);
        if (c > UINT64_MAX) throw ArgumentError("binomial coefficient overflow");
    }
    return static_cast<std::uint64_t>(c);
}

double binomial_expand(const std::function<double(double)>& f, double x, int n) {
    if (n < 0) throw ArgumentError("expansion depth must be non-negative");
    const double denom = std::pow(3.0, n);
    double sum = 0.0;
    for (int r = 0; r <= n; ++r) {
        const double node = std::ldexp(x, r) / denom;
        sum += static_cast<double>(binomial(n, r)) * f(node);
    }
    return sum;
}

double binomial_expand(const Expr& f, double x, int n) {
    return binomial_expand([&f](double t) { return f.eval(t); }, x, n);
}

ProbeResult consistency_probe(const Expr& f, double x, int n1, int n2, double tol) {
    if (n1 == n2) throw ArgumentError("consistency probe needs two different depths");
    const double v1 = binomial_expand(f, x, n1);
    const double v2 = binomial_expand(f, x, n2);
    return {std::fabs(v1 - v2) <= tol * (1.0 + std::fabs(v1)), v1, v2};
}

}  // namespace feq
