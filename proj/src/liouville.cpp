#include "wplab/error.hpp"
#include "wplab/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wplab {

namespace {

constexpr double pi = std::numbers::pi;

// Integral over the disk of |num/den|^2 for Taylor data num, den.
double disk_ratio_integral(const std::vector<cplx>& num, const std::vector<cplx>& den,
                           const QuadratureGrid& grid, const S1Options& opts, double& max_val) {
    const std::size_t n = static_cast<std::size_t>(grid.n_theta);
    double total = 0.0;
    for (int i = 0; i < grid.n_r; ++i) {
        const auto a = evaluate_on_circle(num, grid.r[i], n);
        const auto b = evaluate_on_circle(den, grid.r[i], n);
        double ring = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(b[j]) == 0.0)
                throw NumericalFailure("s1: derivative vanishes on a quadrature node");
            const double v = std::norm(a[j] / b[j]);
            if (!std::isfinite(v) || v > opts.integrand_cap)
                throw NumericalFailure("s1: integrand exceeds the cap; the curve is not in the "
                                       "Weil-Petersson class or is under-resolved",
                                       v);
            max_val = std::max(max_val, v);
            ring += v;
        }
        total += grid.w[i] * ring * (2.0 * pi / static_cast<double>(n));
    }
    return total;
}

// f' and f'' as Taylor coefficient arrays.
std::pair<std::vector<cplx>, std::vector<cplx>> interior_derivs(const ComplexSeries& f) {
    const auto a = f.coeffs();
    std::vector<cplx> d1, d2;
    for (std::size_t k = 1; k < a.size(); ++k)
        d1.push_back(static_cast<double>(k) * a[k]);
    for (std::size_t k = 2; k < a.size(); ++k)
        d2.push_back(static_cast<double>(k * (k - 1)) * a[k]);
    if (d2.empty())
        d2.push_back(0.0);
    return {d2, d1};
}

// In u = 1/z: |g''/g'|^2 |u|^{-4} = |P(u)/G(u)|^2 with
// G(u) = sum (1 - k) L_k u^k = g'(1/u), P(u) = sum_{k>=2} k(k - 1) L_k u^{k-1}.
std::pair<std::vector<cplx>, std::vector<cplx>> exterior_derivs(const ComplexSeries& g) {
    const auto L = g.coeffs();
    std::vector<cplx> P(std::max<std::size_t>(L.size(), 2)), G(L.size());
    for (std::size_t k = 0; k < L.size(); ++k) {
        G[k] = (1.0 - static_cast<double>(k)) * L[k];
        if (k >= 2)
            P[k - 1] = static_cast<double>(k * (k - 1)) * L[k];
    }
    return {P, G};
}

double parseval(const std::vector<cplx>& num, const std::vector<cplx>& den) {
    const auto h = multiply(ComplexSeries::taylor(num), reciprocal(ComplexSeries::taylor(den)));
    double s = 0.0;
    for (std::size_t k = 0; k < h.order(); ++k)
        s += std::norm(h[k]) / static_cast<double>(k + 1);
    return pi * s;
}

} // namespace

S1Terms s1_terms(const WeldingPair& pair, const QuadratureGrid& grid, const S1Options& opts) {
    S1Terms t;
    const auto [fn, fd] = interior_derivs(pair.f);
    const auto [gn, gd] = exterior_derivs(pair.g);
    t.interior = disk_ratio_integral(fn, fd, grid, opts, t.max_integrand);
    t.exterior = disk_ratio_integral(gn, gd, grid, opts, t.max_integrand);
    t.log_term = -4.0 * pi * std::log(std::abs(pair.g_prime_at_infinity));
    return t;
}

std::vector<std::pair<int, int>> default_s1_grids() { return {{64, 128}, {128, 256}, {256, 512}}; }

double s1(const WeldingPair& pair, const QuadratureGrid& grid, const S1Options& opts) {
    return s1_terms(pair, grid, opts).total();
}

ConvergenceReport s1(const WeldingPair& pair, const std::vector<std::pair<int, int>>& grids,
                     const S1Options& opts) {
    if (grids.empty())
        throw InvalidInput("s1: no grids given");
    ConvergenceReport r;
    for (const auto& [nr, nt] : grids) {
        if (!r.orders.empty() && nr <= r.orders.back())
            throw InvalidInput("s1: grid ladder must increase in n_r");
        r.orders.push_back(nr);
        r.estimates.push_back(s1(pair, QuadratureGrid::make(nr, nt), opts));
    }
    r.extrapolated = r.estimates.back();
    r.residual_tail =
        r.estimates.size() > 1 ? std::abs(r.estimates.back() - r.estimates[r.estimates.size() - 2]) : 0.0;
    return r;
}

double s1_series(const WeldingPair& pair) {
    const auto [fn, fd] = interior_derivs(pair.f);
    const auto [gn, gd] = exterior_derivs(pair.g);
    return parseval(fn, fd) + parseval(gn, gd) -
           4.0 * pi * std::log(std::abs(pair.g_prime_at_infinity));
}

IdentityReport identity_report(const WeldingPair& pair, const QuadratureGrid& grid, int N,
                               const S1Options& opts) {
    IdentityReport r;
    r.terms = s1_terms(pair, grid, opts);
    r.S1 = r.terms.total();
    r.S2_univ_via_B1 = logdet_potential(build_B1(pair, N));
    r.S2_univ_via_B4 = logdet_potential(build_B4(pair, N));
    r.residual_identity = std::abs(r.S1 + 12.0 * pi * r.S2_univ_via_B1);
    r.residual_identity_rel = r.residual_identity / std::max(1.0, std::abs(r.S1));
    r.residual_operators = std::abs(r.S2_univ_via_B1 - r.S2_univ_via_B4);
    r.residual_operators_rel =
        r.residual_operators / std::max(1.0, std::abs(r.S2_univ_via_B4));
    r.grid = {grid.n_r, grid.n_theta};
    r.N = N;
    return r;
}

SclReport s_cl_report(double s2_dg, int genus) {
    if (genus < 2)
        throw InvalidInput("s_cl_report: genus must be >= 2");
    if (!std::isfinite(s2_dg) || s2_dg < -1e-12)
        throw InvalidInput("s_cl_report: s2_dg must be nonnegative");
    SclReport r;
    r.genus = genus;
    // Rounding can leave log det a hair above 0; that is the basepoint.
    r.s2_dg = std::max(s2_dg, 0.0);
    r.bound = 8.0 * pi * (2.0 * genus - 2.0);
    r.S_cl = -12.0 * pi * r.s2_dg + r.bound;
    r.slack = r.bound - r.S_cl;
    r.is_fuchsian_point = r.s2_dg == 0.0;
    return r;
}

} // namespace wplab
