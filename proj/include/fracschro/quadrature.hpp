#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fracschro/complex_special.hpp"

namespace fracschro::quad {

// Gauss-Legendre rule on [-1, 1]; n in {8, 16, 32} precomputed, otherwise
// generated by Newton iteration and cached.
const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

struct LineGrid {
    std::vector<double> x;
    std::vector<double> w;
};

// Gauss-Legendre panels over [a, b], `panels` equal pieces.
LineGrid panel_grid(double a, double b, int panels, int nodes_per_panel = 16);

// Symmetric graded panels on [-half_height, half_height]: panel widths start
// at h0 around the origin and grow geometrically by `ratio`.  Node count per
// panel fixed; density halves as |u| grows, matching integrands that decay
// away from the real axis.
LineGrid graded_symmetric_grid(double half_height, double h0, double ratio = 1.12,
                               int nodes_per_panel = 16);

// Adaptive Gauss-Kronrod-style integrator (GL 15/30 pair on bisected
// intervals) for complex integrands on a finite interval.
Complex integrate_adaptive(const std::function<Complex(double)>& f, double a,
                           double b, double abs_tol, double rel_tol = 1e-12,
                           int max_depth = 48);

// tanh-sinh quadrature on (a, b); handles integrable endpoint
// singularities.  Level doubles until the result is stable.
// The three-argument callback receives the abscissa plus its distances to
// both endpoints at full precision, which endpoint-singular integrands need.
Complex tanh_sinh(const std::function<Complex(double, double, double)>& f,
                  double a, double b, double tol, int max_level = 12);
Complex tanh_sinh(const std::function<Complex(double)>& f, double a, double b,
                  double tol, int max_level = 12);

// Oscillatory integral over [a, inf): integrates period-sized blocks with
// the adaptive rule and accelerates the block-sum tail by iterated Aitken
// extrapolation.  `block` is the (half-)period of the dominant oscillation.
Complex integrate_oscillatory_tail(const std::function<Complex(double)>& f,
                                   double a, double block, double tol,
                                   int max_blocks = 4000);

} // namespace fracschro::quad
