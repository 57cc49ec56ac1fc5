#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fracschro/errors.hpp"

namespace fracschro {

using Complex = std::complex<double>;

namespace special {

// Distance below which an argument counts as sitting on a gamma pole.
inline constexpr double pole_tolerance = 1e-12;

// True if z is within tol of a non-positive integer; k receives the pole
// index (z ~ -k) when non-null.
bool near_nonpositive_integer(Complex z, long* k = nullptr,
                              double tol = pole_tolerance);

/// Log-gamma on the cut plane C \ (-inf, 0].
///
/// Standard branch: real on (0, inf), analytic off the cut, and satisfying
/// ln_gamma(conj z) = conj(ln_gamma z).  exp(ln_gamma(z)) == Gamma(z)
/// everywhere away from the poles.
Complex ln_gamma(Complex z);

Complex gamma(Complex z);

// digamma (logarithmic derivative of gamma), same branch structure
Complex digamma(Complex z);

/// exp(sum ln_gamma(num) - sum ln_gamma(den)) computed in the log domain.
/// A denominator at a pole makes the whole ratio exactly zero; a numerator
/// at a pole raises PoleError.
Complex gamma_ratio(std::span<const Complex> numerators,
                    std::span<const Complex> denominators);

/// Rising factorial (a)_n = Gamma(a+n)/Gamma(a); n < 0 uses the reflection
/// (a)_{-m} = (-1)^m / (1-a)_m.
Complex pochhammer(Complex a, long n);

// Principal logarithm, Im in (-pi, pi].
inline Complex principal_log(Complex z) { return std::log(z); }

// z^s as exp(s * log z) with a caller-chosen branch of log z.
inline Complex cpow_log(Complex log_z, Complex s) { return std::exp(s * log_z); }

inline Complex cpow(Complex z, Complex s) { return cpow_log(principal_log(z), s); }

} // namespace special
} // namespace fracschro
