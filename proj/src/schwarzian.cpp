#include "wplab/error.hpp"
#include "wplab/maps.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace wplab {

namespace {

cplx schwarzian_from_jet(const Jet& j) {
    if (std::abs(j.d1) < 1e-300 || std::abs(j.d1) < 1e-14 * std::abs(j.value))
        throw NumericalFailure("schwarzian: h'(z) vanishes", std::abs(j.d1));
    const cplx r = j.d2 / j.d1;
    return j.d3 / j.d1 - 1.5 * r * r;
}

struct Preimage {
    cplx z;
    bool converged = false;
};

// Newton for h(z) = w from the best node of a polar grid over r in `radii`.
Preimage newton_preimage(const ComplexSeries& h, cplx w, const std::vector<double>& radii,
                         const ThetaOptions& opts) {
    const int n_ang = 64;
    cplx seed{};
    double best = std::numeric_limits<double>::infinity();
    for (double r : radii)
        for (int k = 0; k < n_ang; ++k) {
            const cplx z = std::polar(r, 2.0 * std::numbers::pi * k / n_ang);
            const double e = std::abs(h.evaluate(z) - w);
            if (e < best) {
                best = e;
                seed = z;
            }
        }
    Preimage p{seed, false};
    const double scale = std::max(1.0, std::abs(w));
    for (int it = 0; it < opts.newton_max; ++it) {
        const Jet j = evaluate_jet(h, p.z);
        if (std::abs(j.d1) == 0.0)
            return p;
        const cplx step = (j.value - w) / j.d1;
        p.z -= step;
        if (!std::isfinite(p.z.real()) || !std::isfinite(p.z.imag()))
            return p;
        if (std::abs(step) <= opts.newton_tol * std::max(1.0, std::abs(p.z)) &&
            std::abs(h.evaluate(p.z) - w) <= 1e-10 * scale) {
            p.converged = true;
            return p;
        }
    }
    return p;
}

cplx theta_at(const ComplexSeries& h, cplx z) {
    const Jet j = evaluate_jet(h, z);
    return -schwarzian_from_jet(j) / (j.d1 * j.d1);
}

} // namespace

cplx schwarzian(const ComplexSeries& h, cplx z) {
    if (h.kind() == SeriesKind::TaylorAtZero && std::abs(z) >= 1.0)
        throw InvalidInput("schwarzian: Taylor map evaluated outside the unit disk");
    if (h.kind() == SeriesKind::LaurentAtInfinity && std::abs(z) <= 1.0)
        throw InvalidInput("schwarzian: Laurent map evaluated inside the unit disk");
    return schwarzian_from_jet(evaluate_jet(h, z));
}

cplx schwarzian(const std::function<cplx(cplx)>& h, cplx z, double radius, int points) {
    if (!(radius > 0.0) || points < 8)
        throw InvalidInput("schwarzian: need radius > 0 and at least 8 points");
    // Trapezoid rule for the Cauchy integrals of h', h'', h''' on |zeta - z| = radius.
    cplx m1{}, m2{}, m3{};
    for (int j = 0; j < points; ++j) {
        const double t = 2.0 * std::numbers::pi * j / points;
        const cplx v = h(z + std::polar(radius, t));
        m1 += v * std::polar(1.0, -t);
        m2 += v * std::polar(1.0, -2.0 * t);
        m3 += v * std::polar(1.0, -3.0 * t);
    }
    Jet jet;
    jet.d1 = m1 / (points * radius);
    jet.d2 = 2.0 * m2 / (points * radius * radius);
    jet.d3 = 6.0 * m3 / (points * radius * radius * radius);
    jet.value = h(z);
    return schwarzian_from_jet(jet);
}

cplx theta_interior(const ComplexSeries& h, cplx w, const ThetaOptions& opts) {
    std::vector<double> radii;
    for (int i = 1; i <= 16; ++i)
        radii.push_back(i / 16.5);
    const auto p = newton_preimage(h, w, radii, opts);
    if (!p.converged)
        throw NumericalFailure("theta: Newton inversion of f did not converge");
    if (std::abs(p.z) >= 1.0 - opts.boundary_tube)
        throw InvalidInput("theta: w lies within the boundary tube of the curve");
    return theta_at(h, p.z);
}

cplx theta(const WeldingPair& pair, cplx w, const ThetaOptions& opts) {
    std::vector<double> inner, outer;
    for (int i = 1; i <= 16; ++i) {
        inner.push_back(i / 16.5);
        outer.push_back(16.5 / i);
    }
    // A converged preimage pins the side; points whose preimage is near S^1 on
    // either side are refused.
    const double tube = opts.boundary_tube;
    const auto pf = newton_preimage(pair.f, w, inner, opts);
    if (pf.converged && std::abs(pf.z) < 1.0 + tube) {
        if (std::abs(pf.z) > 1.0 - tube)
            throw InvalidInput("theta: w lies within the boundary tube of the curve");
        return theta_at(pair.f, pf.z);
    }
    const auto pg = newton_preimage(pair.g, w, outer, opts);
    if (pg.converged && std::abs(pg.z) > 1.0 - tube) {
        if (std::abs(pg.z) < 1.0 + tube)
            throw InvalidInput("theta: w lies within the boundary tube of the curve");
        return theta_at(pair.g, pg.z);
    }
    throw NumericalFailure("theta: Newton inversion failed on both sides of the curve");
}

} // namespace wplab
