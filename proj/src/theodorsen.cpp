#include "wplab/error.hpp"
#include "wplab/fft.hpp"
#include "wplab/maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wplab {

namespace {

// Harmonic conjugate of a real periodic sequence: mode k times -i sign(k).
void conjugate_function(std::vector<cplx>& x) {
    const std::size_t M = x.size();
    auto X = fft::forward(x);
    X[0] = 0.0;
    X[M / 2] = 0.0;
    for (std::size_t k = 1; k < M / 2; ++k) {
        X[k] *= cplx{0.0, -1.0};
        X[M - k] *= cplx{0.0, 1.0};
    }
    x = fft::backward(X);
    for (auto& v : x)
        v /= static_cast<double>(M);
}

double damping_for(double bound) {
    if (bound <= 0.5)
        return 1.0;
    if (bound < 1.0)
        return 0.8;
    return 1.0 / (1.0 + bound);
}

} // namespace

TheodorsenResult theodorsen_interior(const StarDomain& domain, const TheodorsenOptions& opts) {
    const std::size_t M = opts.samples;
    if (!fft::is_power_of_two(M) || M < 64)
        throw InvalidInput("theodorsen: sample count must be a power of two >= 64");
    if (!(domain.smoothness_bound < opts.max_smoothness))
        throw InvalidInput("theodorsen: domain too rough (smoothness bound " +
                           std::to_string(domain.smoothness_bound) + ")");

    TheodorsenResult res;
    res.damping = damping_for(domain.smoothness_bound);
    std::vector<double> t(M);
    for (std::size_t j = 0; j < M; ++j)
        t[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(M);
    std::vector<double> phi = t;
    std::vector<cplx> work(M);

    double change = 0.0;
    int it = 0;
    for (; it < opts.max_iterations; ++it) {
        for (std::size_t j = 0; j < M; ++j)
            work[j] = domain.log_rho(phi[j]);
        conjugate_function(work);
        change = 0.0;
        for (std::size_t j = 0; j < M; ++j) {
            const double next = t[j] + work[j].real();
            change = std::max(change, std::abs(next - phi[j]));
            phi[j] += res.damping * (next - phi[j]);
        }
        if (!std::isfinite(change))
            throw NumericalFailure("theodorsen: iteration diverged", change);
        if (change <= opts.tol)
            break;
    }
    if (change > opts.tol)
        throw NumericalFailure("theodorsen: no convergence within " +
                                   std::to_string(opts.max_iterations) + " iterations",
                               change);
    res.iterations = it + 1;
    res.residual = change;

    for (std::size_t j = 0; j < M; ++j)
        work[j] = std::exp(cplx{domain.log_rho(phi[j]), phi[j]});
    // Under-resolved maps leak into negative frequencies at roughly the aliasing
    // level; that is reported below rather than treated as non-analyticity.
    auto raw = coeffs_from_samples(work, 1.0, 1e-14, 1e-2).with_order(M / 2);
    std::vector<cplx> a(raw.coeffs().begin(), raw.coeffs().end());
    a[0] = 0.0;
    if (std::abs(a[1]) == 0.0)
        throw NumericalFailure("theodorsen: vanishing derivative at 0");
    // Rotation gauge f'(0) > 0: f(e^{i alpha} z) has coefficients a_k e^{i k alpha}.
    const double alpha = -std::arg(a[1]);
    for (std::size_t k = 1; k < a.size(); ++k)
        a[k] *= std::polar(1.0, alpha * static_cast<double>(k));
    a[1] = std::abs(a[1]);
    double tail = 0.0;
    for (std::size_t k = M / 4; k < a.size(); ++k)
        tail = std::max(tail, std::abs(a[k]));
    res.aliasing = tail / a[1].real();
    res.f = ComplexSeries::taylor(std::move(a));
    res.phi = std::move(phi);
    return res;
}

} // namespace wplab
