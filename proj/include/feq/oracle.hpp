#pragma once

#include <functional>
#include <span>
#include <string>

#include "feq/affine.hpp"
#include "feq/equation.hpp"

namespace feq::oracle {

/// n literal applications of m; the reference for AffineMap::iterate.
double iterate_loop(const AffineMap& m, double x0, long n);

struct ResidualReport {
    double max_abs_residual = 0.0;
    double argmax_point = 0.0;
    std::size_t samples = 0;
    /// max |y| over every point the sweep evaluated.
    double scale = 0.0;
    /// max_abs_residual <= tol * (1 + scale).
    bool within_tolerance = true;
};

/// Residual of the raw equation at each grid point:
///   shift-scale |y(x+1) - y(bx)|, scale |y(x) - y(bx)|, even |y(x) - y(-x)|,
///   odd |y(-x) + y(x)|, three-term |y(3x) - y(x) - y(2x)|.
/// An OutOfDomainError at any evaluated point is rethrown against the grid
/// point that needed it.
ResidualReport residual_sweep(const std::function<double(double)>& y, const EquationSpec& eq,
                              std::span<const double> grid, double tol);

/// The single-point residual used by residual_sweep.
double residual_at(const std::function<double(double)>& y, const EquationSpec& eq, double x);

std::string csv_header();
/// "family,params,samples,max_abs_residual,argmax_point".
std::string csv_row(const EquationSpec& eq, const ResidualReport& r);

}  // namespace feq::oracle
