#pragma once

#include "fracschro/complex_special.hpp"
#include "fracschro/params.hpp"

namespace fracschro::ml {

struct MLParams {
    double alpha = 1.0;       // series order, must be > 0
    Complex beta{1.0, 0.0};   // second parameter
};

struct MLOptions {
    double tol = 1e-10;       // absolute-or-relative target
    int max_terms = 10000;    // series budget
    int contour_nodes = 600;  // trapezoid nodes on the Hankel parabola
    // Taylor/contour switch radius; <= 0 selects automatically from alpha
    // (cancellation in the series grows like exp(|z|^(1/alpha))).
    double series_radius = 0.0;
};

/// E_{alpha,beta}(z) = sum_n z^n / Gamma(n alpha + beta).
Complex eval_ml(const MLParams& p, Complex z, const MLOptions& opts = {});

/// Momentum-space time-evolution kernel
///   E_alpha( -F (i k)^{2 beta} t^alpha / (i^alpha eta) )
/// with principal-branch powers of (ik)^{2 beta} and i^alpha.
Complex ml_time_kernel(const FractionalOrders& orders, const PhysicalParams& phys,
                       double k, double t, const MLOptions& opts = {});

namespace detail {
// individual methods, used by cross-check tests
Complex eval_ml_series(const MLParams& p, Complex z, const MLOptions& opts);
Complex eval_ml_contour(const MLParams& p, Complex z, const MLOptions& opts);
double series_switch_radius(double alpha);
} // namespace detail

} // namespace fracschro::ml
