#include "fracschro/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace fracschro::quad {

namespace {

// Legendre nodes by Newton iteration on P_n, seeded with the Chebyshev-like
// approximation.  Good to ~1e-15 in a handful of steps.
void build_gl(int n, std::vector<double>& x, std::vector<double>& w)
{
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

struct GlCache {
    std::map<int, std::pair<std::vector<double>, std::vector<double>>> rules;
    std::mutex mu;
    const std::pair<std::vector<double>, std::vector<double>>& get(int n)
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = rules.find(n);
        if (it == rules.end()) {
            std::pair<std::vector<double>, std::vector<double>> r;
            build_gl(n, r.first, r.second);
            it = rules.emplace(n, std::move(r)).first;
        }
        return it->second;
    }
};

GlCache& cache()
{
    static GlCache c;
    return c;
}

} // namespace

const std::vector<double>& gl_nodes(int n) { return cache().get(n).first; }
const std::vector<double>& gl_weights(int n) { return cache().get(n).second; }

LineGrid panel_grid(double a, double b, int panels, int nodes_per_panel)
{
    const auto& gx = gl_nodes(nodes_per_panel);
    const auto& gw = gl_weights(nodes_per_panel);
    LineGrid g;
    g.x.reserve(static_cast<size_t>(panels) * nodes_per_panel);
    g.w.reserve(static_cast<size_t>(panels) * nodes_per_panel);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (int j = 0; j < nodes_per_panel; ++j) {
            g.x.push_back(mid + 0.5 * h * gx[j]);
            g.w.push_back(0.5 * h * gw[j]);
        }
    }
    return g;
}

LineGrid graded_symmetric_grid(double half_height, double h0, double ratio,
                               int nodes_per_panel)
{
    std::vector<double> edges{0.0};
    double h = h0;
    while (edges.back() < half_height) {
        edges.push_back(std::min(edges.back() + h, half_height));
        h *= ratio;
    }
    const auto& gx = gl_nodes(nodes_per_panel);
    const auto& gw = gl_weights(nodes_per_panel);
    LineGrid g;
    const size_t np = edges.size() - 1;
    g.x.reserve(2 * np * nodes_per_panel);
    g.w.reserve(2 * np * nodes_per_panel);
    // negative side first (ascending order keeps summation deterministic)
    for (size_t p = np; p-- > 0;) {
        const double lo = -edges[p + 1], hi = -edges[p];
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int j = 0; j < nodes_per_panel; ++j) {
            g.x.push_back(mid + half * gx[j]);
            g.w.push_back(half * gw[j]);
        }
    }
    for (size_t p = 0; p < np; ++p) {
        const double lo = edges[p], hi = edges[p + 1];
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int j = 0; j < nodes_per_panel; ++j) {
            g.x.push_back(mid + half * gx[j]);
            g.w.push_back(half * gw[j]);
        }
    }
    return g;
}

namespace {

Complex gl_apply(const std::function<Complex(double)>& f, double a, double b, int n)
{
    const auto& gx = gl_nodes(n);
    const auto& gw = gl_weights(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Complex s = 0.0;
    for (int j = 0; j < n; ++j) s += gw[j] * f(mid + half * gx[j]);
    return half * s;
}

Complex adapt_rec(const std::function<Complex(double)>& f, double a, double b,
                  Complex coarse, double tol, int depth, int max_depth)
{
    const double mid = 0.5 * (a + b);
    const Complex left = gl_apply(f, a, mid, 15);
    const Complex right = gl_apply(f, mid, b, 15);
    const Complex fine = left + right;
    if (depth >= max_depth) return fine;
    if (std::abs(fine - coarse) <= tol) return fine;
    return adapt_rec(f, a, mid, left, 0.5 * tol, depth + 1, max_depth) +
           adapt_rec(f, mid, b, right, 0.5 * tol, depth + 1, max_depth);
}

} // namespace

Complex integrate_adaptive(const std::function<Complex(double)>& f, double a,
                           double b, double abs_tol, double rel_tol, int max_depth)
{
    const Complex coarse = gl_apply(f, a, b, 15);
    const double tol = std::max(abs_tol, rel_tol * std::abs(coarse));
    return adapt_rec(f, a, b, coarse, tol, 0, max_depth);
}

Complex tanh_sinh(const std::function<Complex(double)>& f, double a, double b,
                  double tol, int max_level)
{
    // x = mid + half * tanh(pi/2 sinh(t)); doubled trapezoid in t
    const double half = 0.5 * (b - a);
    const double tmax = 3.8; // tanh(pi/2 sinh 3.8) is 1 to ~1e-30
    // abscissa built from the distance to the nearer endpoint so that
    // integrable endpoint singularities see full precision
    auto node = [&](double t, double& x, double& w) {
        const double s = std::sinh(t);
        const double c = std::cosh(t);
        const double y = 0.5 * M_PI * s;
        const double e2 = std::exp(-2.0 * std::abs(y));
        const double one_minus = 2.0 * e2 / (1.0 + e2); // 1 - |tanh(y)|
        if (y <= 0.0)
            x = a + half * one_minus;
        else
            x = b - half * one_minus;
        const double sech2 = 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
        w = half * 0.5 * M_PI * c * sech2;
    };
    double h = 1.0;
    double x, w;
    node(0.0, x, w);
    Complex sum = f(x) * w;
    for (int k = 1; k <= static_cast<int>(tmax); ++k) {
        node(k * 1.0, x, w);
        if (x > a && x < b && w > 0.0) sum += f(x) * w;
        node(-k * 1.0, x, w);
        if (x > a && x < b && w > 0.0) sum += f(x) * w;
    }
    Complex prev = sum * h;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        Complex add = 0.0;
        const int kmax = static_cast<int>(tmax / h);
        for (int k = 1; k <= kmax; k += 2) { // only new nodes
            node(k * h, x, w);
            if (x > a && x < b && w > 0.0) add += f(x) * w;
            node(-k * h, x, w);
            if (x > a && x < b && w > 0.0) add += f(x) * w;
        }
        sum += add;
        const Complex cur = sum * h;
        if (level >= 3 && std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur)))
            return cur;
        prev = cur;
    }
    return prev;
}

Complex integrate_oscillatory_tail(const std::function<Complex(double)>& f,
                                   double a, double block, double tol,
                                   int max_blocks)
{
    std::vector<Complex> partial;
    partial.reserve(64);
    Complex run = 0.0;
    double lo = a;
    int small_streak = 0;
    for (int b = 0; b < max_blocks; ++b) {
        const Complex piece = integrate_adaptive(f, lo, lo + block, tol * 1e-3, 1e-10, 24);
        run += piece;
        partial.push_back(run);
        lo += block;
        if (std::abs(piece) < 0.25 * tol) {
            if (++small_streak >= 3) break;
        } else {
            small_streak = 0;
        }
        // iterated Aitken on the recent partial sums once enough collected
        if (partial.size() >= 24 && b % 8 == 0) {
            std::vector<Complex> s(partial.end() - 16, partial.end());
            for (int pass = 0; pass < 5 && s.size() > 2; ++pass) {
                std::vector<Complex> nxt;
                for (size_t i = 0; i + 2 < s.size(); ++i) {
                    const Complex d = s[i + 2] - 2.0 * s[i + 1] + s[i];
                    nxt.push_back(std::abs(d) == 0.0
                                      ? s[i + 2]
                                      : s[i + 2] - (s[i + 2] - s[i + 1]) * (s[i + 2] - s[i + 1]) / d);
                }
                s = std::move(nxt);
            }
            if (!s.empty()) {
                const Complex est = s.back();
                // accept when the raw tail is already close to the accelerated value
                if (std::abs(est - run) < tol) return est;
            }
        }
    }
    if (partial.size() < 4) return run;
    std::vector<Complex> s(partial.end() - std::min<size_t>(16, partial.size()), partial.end());
    for (int pass = 0; pass < 5 && s.size() > 2; ++pass) {
        std::vector<Complex> nxt;
        for (size_t i = 0; i + 2 < s.size(); ++i) {
            const Complex d = s[i + 2] - 2.0 * s[i + 1] + s[i];
            nxt.push_back(std::abs(d) == 0.0
                              ? s[i + 2]
                              : s[i + 2] - (s[i + 2] - s[i + 1]) * (s[i + 2] - s[i + 1]) / d);
        }
        s = std::move(nxt);
    }
    return s.empty() ? run : s.back();
}

} // namespace fracschro::quad
