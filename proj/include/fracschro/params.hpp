#pragma once

#include <cmath>
#include <string>

#include "fracschro/errors.hpp"

namespace fracschro {

/// The order triple (alpha, beta, alpha') of the evolution equation and the
/// initial condition.
struct FractionalOrders {
    double alpha = 1.0;        // time order, 0 < alpha <= 1
    double beta = 1.0;         // space order (half of it), 0.5 <= beta <= 1
    double alpha_prime = 1.0;  // initial-condition order

    /// Equation-level windows.  beta = 0.5 is accepted: the figure parameter
    /// sets include it even though the equation window is open there.
    void validate_base() const
    {
        if (!(alpha > 0.0 && alpha <= 1.0))
            throw ValidityError("orders: need 0 < alpha <= 1, got alpha = " + std::to_string(alpha));
        if (!(beta >= 0.5 && beta <= 1.0))
            throw ValidityError("orders: need 0.5 <= beta <= 1, got beta = " + std::to_string(beta));
    }

    /// Wave-function window: 2 - alpha >= beta (equality = marginal boundary,
    /// handled by a dedicated evaluation path) and alpha' < 4/3.
    void validate_wavefunction() const
    {
        validate_base();
        if (!(2.0 - alpha >= beta))
            throw ValidityError("orders: wave-function window violated: need 2 - alpha > beta");
        if (!(alpha_prime < 4.0 / 3.0))
            throw ValidityError("orders: wave-function window violated: need alpha' < 4/3");
        if (!(alpha_prime > 0.0))
            throw ValidityError("orders: need alpha' > 0");
    }

    /// Energy window: 1/2 < alpha' < 4/3 and 2 - alpha >= beta.
    void validate_energy() const
    {
        validate_base();
        if (!(alpha_prime > 0.5 && alpha_prime < 4.0 / 3.0))
            throw ValidityError("orders: energy window violated: need 1/2 < alpha' < 4/3");
        if (!(2.0 - alpha >= beta))
            throw ValidityError("orders: energy window violated: need 2 - alpha > beta");
    }

    bool classical() const
    {
        return alpha == 1.0 && beta == 1.0 && alpha_prime == 1.0;
    }
};

/// Physical constants of the problem.  eta and F are derived quantities and
/// recomputed from (m, c, hbar) and the orders on every call.
struct PhysicalParams {
    double mass = 1.0;
    double light_speed = 1.0;
    double hbar = 1.0;
    double well_strength = 1.0;  // v0 of the well -v0 delta(x)
    double lambda = 1.0;         // initial-condition decay rate
    double amplitude = 1.0;      // initial-condition amplitude A

    static PhysicalParams natural() { return {}; }

    /// lambda and A fixed by matching the classical bound state:
    /// lambda = v0 m / hbar^2, A = sqrt(v0 m) / hbar.
    static PhysicalParams from_well(double m, double c, double hb, double v0)
    {
        PhysicalParams p;
        p.mass = m;
        p.light_speed = c;
        p.hbar = hb;
        p.well_strength = v0;
        p.lambda = v0 * m / (hb * hb);
        p.amplitude = std::sqrt(v0 * m) / hb;
        return p;
    }

    void validate() const
    {
        if (!(mass > 0 && light_speed > 0 && hbar > 0 && well_strength > 0 &&
              lambda > 0 && amplitude > 0))
            throw ValidityError("physical params must all be strictly positive");
    }

    // eta = m c^2 (hbar / (m c^2))^alpha
    double eta(const FractionalOrders& o) const
    {
        const double mc2 = mass * light_speed * light_speed;
        return mc2 * std::pow(hbar / mc2, o.alpha);
    }

    // F = (1/2) m c^2 (hbar / (m c))^(2 beta)
    double big_f(const FractionalOrders& o) const
    {
        const double mc2 = mass * light_speed * light_speed;
        return 0.5 * mc2 * std::pow(hbar / (mass * light_speed), 2.0 * o.beta);
    }
};

} // namespace fracschro
