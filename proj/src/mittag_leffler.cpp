#include "fracschro/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fracschro::ml {

using special::ln_gamma;
using special::near_nonpositive_integer;

namespace detail {

double series_switch_radius(double alpha)
{
    // keep the series' worst cancellation exp(|z|^{1/alpha}) under ~1e3
    return std::min(5.0, std::pow(6.9, alpha));
}

Complex eval_ml_series(const MLParams& p, Complex z, const MLOptions& opts)
{
    Complex sum = 0.0, comp = 0.0; // Kahan
    Complex zn = 1.0;
    double maxmag = 0.0;
    for (int n = 0; n < opts.max_terms; ++n) {
        const Complex garg = p.beta + p.alpha * static_cast<double>(n);
        Complex term;
        if (near_nonpositive_integer(garg)) {
            term = 0.0; // 1/Gamma at a pole
        } else {
            term = zn * std::exp(-ln_gamma(garg));
        }
        const Complex y = term - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        maxmag = std::max(maxmag, std::abs(term));
        if (n > 4 && std::abs(term) < opts.tol * 1e-3 * std::max(1.0, std::abs(sum)))
            return sum;
        zn *= z;
        if (!std::isfinite(zn.real()) || !std::isfinite(zn.imag()))
            throw ConvergenceError("eval_ml: series overflow before convergence");
    }
    throw ConvergenceError("eval_ml: series budget exhausted");
}

// Bromwich-parabola representation:
//   E_{a,b}(z) = (1/2 pi i) int_P e^s s^{a-b} / (s^a - z) ds
//              + sum over roots s* = z^{1/a} (all sheets with |arg| < pi)
//                lying right of P of (1/a) s*^{1-b} e^{s*}.
// The parabola is s(u) = mu (1+iu)^2, oriented upward.
Complex eval_ml_contour(const MLParams& p, Complex z, const MLOptions& opts)
{
    const double a = p.alpha;
    const Complex b = p.beta;

    // roots of s^a = z on the principal sheet
    std::vector<Complex> roots;
    const double r = std::pow(std::abs(z), 1.0 / a);
    const double th0 = std::arg(z);
    for (int m = -3; m <= 3; ++m) {
        const double th = (th0 + 2.0 * M_PI * m) / a;
        if (std::abs(th) < M_PI) roots.push_back(std::polar(r, th));
    }

    double mu = 12.0;
    auto contour_clear = [&](double m) {
        for (const Complex& s : roots) {
            // distance from s to the parabola x = m - y^2/(4m), crude probe
            const double y = s.imag();
            const double px = m - y * y / (4.0 * m);
            const double d = std::abs(s.real() - px);
            if (d < std::max(0.5, 0.02 * std::abs(s))) return false;
        }
        return true;
    };
    for (int tries = 0; tries < 60 && !contour_clear(mu); ++tries) mu *= 1.25;

    Complex residues = 0.0;
    for (const Complex& s : roots) {
        const double y = s.imag();
        const double px = mu - y * y / (4.0 * mu);
        if (s.real() > px)
            residues += (1.0 / a) * std::exp((1.0 - b) * std::log(s) + s);
    }

    const double umax = std::sqrt(1.0 + 46.0 / mu);
    const int n = opts.contour_nodes;
    const double h = 2.0 * umax / n;
    Complex sum = 0.0, comp = 0.0;
    for (int j = 0; j <= n; ++j) {
        const double u = -umax + j * h;
        const Complex onePlus(1.0, u);
        const Complex s = mu * onePlus * onePlus;
        const Complex ds(0.0, 2.0 * mu); // d s / du = 2 i mu (1 + i u)
        const Complex dsdu = ds * onePlus;
        const Complex integrand =
            std::exp(s + (a - b) * std::log(s)) / (std::exp(a * std::log(s)) - z) * dsdu;
        const double wt = (j == 0 || j == n) ? 0.5 : 1.0;
        const Complex y = wt * integrand - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    const Complex integral = sum * h / Complex(0.0, 2.0 * M_PI);
    return integral + residues;
}

} // namespace detail

Complex eval_ml(const MLParams& p, Complex z, const MLOptions& opts)
{
    if (!(p.alpha > 0.0))
        throw ValidityError("eval_ml: requires alpha > 0");
    if (p.alpha == 1.0 && p.beta == Complex(1.0, 0.0)) return std::exp(z);
    const double radius =
        opts.series_radius > 0.0 ? opts.series_radius : detail::series_switch_radius(p.alpha);
    if (std::abs(z) <= radius) return detail::eval_ml_series(p, z, opts);
    return detail::eval_ml_contour(p, z, opts);
}

Complex ml_time_kernel(const FractionalOrders& orders, const PhysicalParams& phys,
                       double k, double t, const MLOptions& opts)
{
    orders.validate_base();
    if (t < 0.0) throw ValidityError("ml_time_kernel: requires t >= 0");
    if (t == 0.0) return Complex(1.0, 0.0); // E_alpha(0) = 1
    const double eta = phys.eta(orders);
    const double F = phys.big_f(orders);
    // -F (ik)^{2 beta} t^alpha / (i^alpha eta), principal branches throughout
    const double mag = (F / eta) * std::pow(std::abs(k), 2.0 * orders.beta) *
                       std::pow(t, orders.alpha);
    if (mag == 0.0) return Complex(1.0, 0.0);
    const double sign = (k >= 0.0) ? 1.0 : -1.0;
    const double phase = sign * M_PI * orders.beta - 0.5 * M_PI * orders.alpha;
    const Complex z = -mag * std::polar(1.0, phase);
    return eval_ml({orders.alpha, Complex(1.0, 0.0)}, z, opts);
}

} // namespace fracschro::ml
