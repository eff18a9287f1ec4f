#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "feq/expr.hpp"
#include "feq/initial_data.hpp"
#include "feq/interval.hpp"

namespace feq::test {

inline InitialData data(const std::string& set, const std::string& fn) {
    return InitialData::uniform(parse_interval_union(set), parse_expr(fn));
}

inline bool rel_close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

/// Fixed-seed generator so failures reproduce.
class Rng {
public:
    explicit Rng(std::uint32_t seed = 20240611u) : gen_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    bool coin() { return integer(0, 1) == 1; }
    std::mt19937& engine() { return gen_; }

private:
    std::mt19937 gen_;
};

}  // namespace feq::test
