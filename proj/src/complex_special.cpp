#include "fracschro/complex_special.hpp"

#include <cmath>
#include <cstdlib>

namespace fracschro::special {

namespace {

constexpr double kLogTwoPiHalf = 0.91893853320467274178032973640562; // ln(2*pi)/2
constexpr double kLogPi = 1.1447298858494001741434273513531;

// B_{2n} / (2n (2n-1)) for the Stirling series
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// Stirling series after shifting the argument to |w| >= 16.  Valid for
// Re z >= 0.5 where every shifted log stays on the principal branch.
Complex ln_gamma_right(Complex z)
{
    Complex shift_log = 0.0;
    int m = 0;
    while (std::abs(z + static_cast<double>(m)) < 16.0) {
        shift_log += std::log(z + static_cast<double>(m));
        ++m;
    }
    const Complex w = z + static_cast<double>(m);
    const Complex lw = std::log(w);
    Complex s = (w - 0.5) * lw - w + kLogTwoPiHalf;
    const Complex w2 = 1.0 / (w * w);
    Complex p = 1.0 / w;
    for (double c : kStirling) {
        s += c * p;
        p *= w2;
    }
    return s - shift_log;
}

// log(sin(pi z)) for Im z >= 0, continuous off the real axis.
Complex log_sin_pi_upper(Complex z)
{
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i)
    const Complex i(0.0, 1.0);
    const Complex e = std::exp(2.0 * M_PI * i * z);
    return -i * M_PI * z + std::log(1.0 - e) + i * M_PI / 2.0 - std::log(2.0);
}

} // namespace

bool near_nonpositive_integer(Complex z, long* k, double tol)
{
    if (z.real() > 0.5 || std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    if (r > 0.5) return false;
    if (std::abs(z.real() - r) > tol) return false;
    if (k) *k = static_cast<long>(-r);
    return true;
}

Complex ln_gamma(Complex z)
{
    if (near_nonpositive_integer(z))
        throw PoleError("ln_gamma: argument at a non-positive integer pole");
    if (z.imag() < 0.0) return std::conj(ln_gamma(std::conj(z)));
    if (z.real() >= 0.5) return ln_gamma_right(z);
    // reflection: ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1 - z)
    // 1-z has Re >= 0.5 and Im <= 0, so evaluate its conjugate directly.
    const Complex lg1mz = std::conj(ln_gamma_right(std::conj(1.0 - z)));
    return kLogPi - log_sin_pi_upper(z) - lg1mz;
}

Complex gamma(Complex z)
{
    long k = 0;
    if (near_nonpositive_integer(z, &k))
        throw PoleError("gamma: argument at a non-positive integer pole");
    return std::exp(ln_gamma(z));
}

Complex digamma(Complex z)
{
    if (z.imag() < 0.0) return std::conj(digamma(std::conj(z)));
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        const Complex i(0.0, 1.0);
        const Complex e = std::exp(2.0 * M_PI * i * z);
        const Complex cot = i * (e + 1.0) / (e - 1.0);
        return digamma(1.0 - z) - M_PI * cot;
    }
    Complex shift = 0.0;
    Complex w = z;
    while (std::abs(w) < 16.0) {
        shift -= 1.0 / w;
        w += 1.0;
    }
    const Complex w2 = 1.0 / (w * w);
    // psi(w) ~ ln w - 1/(2w) - sum B_{2n}/(2n w^{2n})
    Complex s = std::log(w) - 0.5 / w;
    static constexpr double b[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                                   1.0 / 132, -691.0 / 32760, 1.0 / 12};
    Complex p = w2;
    for (double c : b) {
        s -= c * p;
        p *= w2;
    }
    return s + shift;
}

Complex gamma_ratio(std::span<const Complex> numerators,
                    std::span<const Complex> denominators)
{
    for (const Complex& d : denominators) {
        if (near_nonpositive_integer(d)) {
            // 1/Gamma at a pole vanishes; the ratio is exactly zero unless a
            // numerator is simultaneously singular.
            for (const Complex& narg : numerators)
                if (near_nonpositive_integer(narg))
                    throw PoleError("gamma_ratio: numerator argument at a pole");
            return Complex(0.0, 0.0);
        }
    }
    Complex acc = 0.0;
    for (const Complex& nu : numerators) {
        if (near_nonpositive_integer(nu))
            throw PoleError("gamma_ratio: numerator argument at a pole");
        acc += ln_gamma(nu);
    }
    for (const Complex& d : denominators) acc -= ln_gamma(d);
    return std::exp(acc);
}

Complex pochhammer(Complex a, long n)
{
    if (n == 0) return Complex(1.0, 0.0);
    if (n < 0) {
        // (a)_{-m} = (-1)^m / (1-a)_m
        const long m2 = -n;
        const Complex denom = pochhammer(1.0 - a, m2);
        if (std::abs(denom) == 0.0)
            throw PoleError("pochhammer: reflection hit a zero factor");
        const double sign = (m2 % 2 == 0) ? 1.0 : -1.0;
        return sign / denom;
    }
    for (long k = 0; k < n; ++k)
        if (near_nonpositive_integer(a + static_cast<double>(k)))
            throw PoleError("pochhammer: intermediate pole");
    if (n <= 64) {
        Complex prod = 1.0;
        for (long k = 0; k < n; ++k) prod *= a + static_cast<double>(k);
        return prod;
    }
    return std::exp(ln_gamma(a + static_cast<double>(n)) - ln_gamma(a));
}

} // namespace fracschro::special
