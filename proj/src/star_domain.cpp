#include "wplab/error.hpp"
#include "wplab/fft.hpp"
#include "wplab/maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wplab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// max |(log rho)'| from a spectral derivative on 4096 samples.
double spectral_smoothness(const std::function<double(double)>& log_rho) {
    const std::size_t n = 4096;
    std::vector<cplx> s(n);
    for (std::size_t j = 0; j < n; ++j)
        s[j] = log_rho(two_pi * static_cast<double>(j) / static_cast<double>(n));
    auto X = fft::forward(s);
    for (std::size_t k = 0; k < n; ++k) {
        const long m = k < n / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n);
        X[k] *= k == n / 2 ? cplx{} : cplx{0.0, static_cast<double>(m)} / static_cast<double>(n);
    }
    const auto d = fft::backward(X);
    double m = 0.0;
    for (const auto& v : d)
        m = std::max(m, std::abs(v.real()));
    return m;
}

} // namespace

double StarDomain::rho(double theta) const { return std::exp(log_rho(theta)); }

StarDomain StarDomain::circle() {
    return {"circle", {}, [](double) { return 0.0; }, 0.0};
}

StarDomain StarDomain::ellipse(double c) {
    if (!(c > 0.0 && c < 1.0))
        throw InvalidInput("ellipse: need 0 < c < 1");
    const double a = 1.0 + c, b = 1.0 - c;
    StarDomain d;
    d.tag = "ellipse";
    d.params = {c};
    d.log_rho = [a, b](double t) {
        const double ct = std::cos(t), st = std::sin(t);
        return std::log(a * b) - 0.5 * std::log(b * b * ct * ct + a * a * st * st);
    };
    // rho'/rho = (a^2 - b^2) sin t cos t / (b^2 cos^2 + a^2 sin^2), maximal value below.
    d.smoothness_bound = (a * a - b * b) / (2.0 * a * b);
    return d;
}

StarDomain StarDomain::fourier_bump(double eps, int k) {
    if (!(std::abs(eps) < 1.0) || k < 1)
        throw InvalidInput("fourier_bump: need |eps| < 1 and k >= 1");
    StarDomain d;
    d.tag = "fourier_bump";
    d.params = {eps, static_cast<double>(k)};
    d.log_rho = [eps, k](double t) { return std::log1p(eps * std::cos(k * t)); };
    d.smoothness_bound = spectral_smoothness(d.log_rho);
    return d;
}

StarDomain StarDomain::from_samples(std::vector<double> rho) {
    const std::size_t n = rho.size();
    if (n < 4)
        throw InvalidInput("from_samples: need at least 4 samples");
    std::vector<cplx> s(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!(rho[j] > 0.0) || !std::isfinite(rho[j]))
            throw InvalidInput("from_samples: rho must be positive and finite");
        s[j] = std::log(rho[j]);
    }
    auto X = fft::forward(s);
    for (auto& x : X)
        x /= static_cast<double>(n);
    // Real trigonometric interpolant; the Nyquist term is split evenly.
    const std::size_t half = n / 2;
    std::vector<double> ca(half + 1), sa(half + 1);
    ca[0] = X[0].real();
    for (std::size_t k = 1; k <= half; ++k) {
        const cplx c = X[k];
        const double w = (2 * k == n) ? 1.0 : 2.0;
        ca[k] = w * c.real();
        sa[k] = (2 * k == n) ? 0.0 : -w * c.imag();
    }
    StarDomain d;
    d.tag = "samples";
    d.log_rho = [ca, sa](double t) {
        double v = ca[0];
        for (std::size_t k = 1; k < ca.size(); ++k)
            v += ca[k] * std::cos(k * t) + sa[k] * std::sin(k * t);
        return v;
    };
    d.smoothness_bound = spectral_smoothness(d.log_rho);
    return d;
}

StarDomain StarDomain::inverted() const {
    StarDomain d = *this;
    d.tag = tag + "_inverted";
    auto f = log_rho;
    d.log_rho = [f](double t) { return -f(t); };
    return d;
}

} // namespace wplab
