#include "wplab/error.hpp"
#include "wplab/liouville.hpp"

#include <cmath>
#include <numbers>

namespace wplab {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b) {
    if (n < 1)
        throw InvalidInput("gauss_legendre: need n >= 1");
    std::vector<double> x(n), w(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton on P_n from the Chebyshev-like initial guess.
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-16)
                break;
        }
        x[i] = mid - half * t;
        x[n - 1 - i] = mid + half * t;
        w[i] = w[n - 1 - i] = 2.0 * half / ((1.0 - t * t) * dp * dp);
    }
    return {x, w};
}

QuadratureGrid QuadratureGrid::make(int n_r, int n_theta) {
    if (n_r < 1 || n_theta < 1 || (n_theta & (n_theta - 1)) != 0)
        throw InvalidInput("quadrature grid: need n_r >= 1 and n_theta a power of two");
    QuadratureGrid g;
    g.n_r = n_r;
    g.n_theta = n_theta;
    auto [x, w] = gauss_legendre(n_r, 0.0, 1.0);
    g.r = x;
    g.w.resize(n_r);
    for (int i = 0; i < n_r; ++i)
        g.w[i] = w[i] * x[i];
    return g;
}

double QuadratureGrid::disk_area() const {
    double s = 0.0;
    for (double v : w)
        s += v;
    return 2.0 * std::numbers::pi * s;
}

} // namespace wplab
