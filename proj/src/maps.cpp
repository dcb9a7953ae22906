#include "wplab/error.hpp"
#include "wplab/fft.hpp"
#include "wplab/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace wplab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Values of s at z_j = r e^{2 pi i j/n}.
std::vector<cplx> sample_circle(const ComplexSeries& s, double r, std::size_t n) {
    if (s.kind() == SeriesKind::TaylorAtZero)
        return evaluate_on_circle(s.coeffs(), r, n);
    // g(z) = z sum L_k u^k, u = 1/z = (1/r) e^{-2 pi i j/n}.
    const auto inner = evaluate_on_circle(s.coeffs(), 1.0 / r, n);
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        const cplx z = std::polar(r, two_pi * static_cast<double>(j) / static_cast<double>(n));
        out[j] = z * inner[(n - j) % n];
    }
    return out;
}

double param_or(const std::map<std::string, double>& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end())
        throw InvalidInput("catalog: missing parameter '" + key + "'");
    if (!std::isfinite(it->second))
        throw InvalidInput("catalog: parameter '" + key + "' is not finite");
    return it->second;
}

TheodorsenResult map_with_samples(const StarDomain& d, const CatalogOptions& opts,
                                  std::size_t& used) {
    TheodorsenOptions t;
    if (opts.samples != 0) {
        t.samples = opts.samples;
        used = t.samples;
        return theodorsen_interior(d, t);
    }
    // Double M until the upper half of the retained band is at rounding level.
    for (t.samples = 1024;; t.samples *= 2) {
        auto r = theodorsen_interior(d, t);
        if (r.aliasing <= 1e-13 || t.samples * 2 > opts.max_samples) {
            used = t.samples;
            return r;
        }
    }
}

// Distance from w to the curve s(S^1), by Newton on the parameter from a seed.
double distance_to_curve(const ComplexSeries& s, cplx w, double seed) {
    double t = seed;
    double best = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 8; ++it) {
        const cplx z = std::polar(1.0, t);
        const Jet j = evaluate_jet(s, z);
        const cplx G = j.value - w;
        const cplx G1 = cplx{0.0, 1.0} * z * j.d1;
        const cplx G2 = -z * j.d1 - z * z * j.d2;
        best = std::min(best, std::abs(G));
        const double h = (std::conj(G) * G1).real();
        const double dh = std::norm(G1) + (std::conj(G) * G2).real();
        if (dh <= 0.0)
            break;
        const double step = h / dh;
        t -= step;
        if (std::abs(step) < 1e-15)
            break;
    }
    return std::min(best, std::abs(s.evaluate(std::polar(1.0, t)) - w));
}

double one_sided(const ComplexSeries& from, const ComplexSeries& to, std::size_t M) {
    const std::size_t dense = 4 * M;
    const auto a = sample_circle(from, 1.0, M);
    const auto b = sample_circle(to, 1.0, dense);
    double worst = 0.0;
    for (const auto& w : a) {
        std::size_t arg = 0;
        double d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < dense; ++i) {
            const double e = std::norm(b[i] - w);
            if (e < d) {
                d = e;
                arg = i;
            }
        }
        const double seed = two_pi * static_cast<double>(arg) / static_cast<double>(dense);
        worst = std::max(worst, distance_to_curve(to, w, seed));
    }
    return worst;
}

} // namespace

ComplexSeries exterior_via_inversion(const ComplexSeries& f_inv) {
    if (f_inv.kind() != SeriesKind::TaylorAtZero || f_inv.order() < 2)
        throw InvalidInput("exterior_via_inversion: Taylor series of order >= 2 required");
    if (std::abs(f_inv[0]) > 1e-12 * std::abs(f_inv[1]))
        throw InvalidInput("exterior_via_inversion: f_inv(0) must vanish");
    if (f_inv[1] == 0.0)
        throw InvalidInput("exterior_via_inversion: f_inv'(0) = 0, image degenerate at 0");
    // conj f_inv(1/conj z) = u A(u), A(u) = sum conj(a_{k+1}) u^k, u = 1/z;
    // so g = z / A(u) and the Laurent coefficients are those of 1/A.
    std::vector<cplx> A(f_inv.order() - 1);
    for (std::size_t k = 0; k < A.size(); ++k)
        A[k] = std::conj(f_inv[k + 1]);
    auto R = reciprocal(ComplexSeries::taylor(std::move(A)));
    return ComplexSeries::laurent({R.coeffs().begin(), R.coeffs().end()});
}

ComplexSeries interior_via_inversion(const ComplexSeries& g) {
    if (g.kind() != SeriesKind::LaurentAtInfinity)
        throw InvalidInput("interior_via_inversion: Laurent series required");
    if (g[0] == 0.0)
        throw InvalidInput("interior_via_inversion: g must have a simple pole at infinity");
    // conj g(1/conj z) = C(z)/z with C(z) = sum conj(L_k) z^k, so f = z / C(z).
    auto C = reciprocal(conjugate(ComplexSeries::taylor({g.coeffs().begin(), g.coeffs().end()})));
    std::vector<cplx> f(C.order() + 1);
    std::copy(C.coeffs().begin(), C.coeffs().end(), f.begin() + 1);
    return ComplexSeries::taylor(std::move(f));
}

Family parse_family(const std::string& tag) {
    if (tag == "identity")
        return Family::Identity;
    if (tag == "ellipse")
        return Family::Ellipse;
    if (tag == "fourier_bump")
        return Family::FourierBump;
    throw InvalidInput("unknown family '" + tag + "'");
}

std::string family_name(Family f) {
    switch (f) {
    case Family::Identity: return "identity";
    case Family::Ellipse: return "ellipse";
    case Family::FourierBump: return "fourier_bump";
    }
    return "?";
}

WeldingPair normalize_pair(const ComplexSeries& raw_f, const ComplexSeries& raw_g) {
    if (raw_f.kind() != SeriesKind::TaylorAtZero || raw_g.kind() != SeriesKind::LaurentAtInfinity)
        throw InvalidInput("normalize_pair: expected (Taylor, Laurent)");
    if (raw_f.order() < 2 || std::abs(raw_f[1]) == 0.0)
        throw InvalidInput("normalize_pair: f'(0) = 0, not univalent");
    if (raw_g[0] == 0.0)
        throw InvalidInput("normalize_pair: g(inf) must be inf");
    const cplx a0 = raw_f[0], a1 = raw_f[1];
    std::vector<cplx> f(raw_f.coeffs().begin(), raw_f.coeffs().end());
    f[0] = 0.0;
    f[1] = 1.0;
    for (std::size_t k = 2; k < f.size(); ++k)
        f[k] /= a1;
    std::vector<cplx> g(raw_g.coeffs().begin(), raw_g.coeffs().end());
    if (g.size() > 1)
        g[1] -= a0;
    for (auto& c : g)
        c /= a1;
    WeldingPair p;
    p.f = ComplexSeries::taylor(std::move(f));
    p.g = ComplexSeries::laurent(std::move(g));
    p.g_prime_at_infinity = p.g[0];
    return p;
}

WeldingPair catalog(Family family, const std::map<std::string, double>& params,
                    const CatalogOptions& opts) {
    if (opts.samples != 0 && (!fft::is_power_of_two(opts.samples) || opts.samples < 64))
        throw InvalidInput("catalog: samples must be a power of two >= 64");
    WeldingPair p;
    const std::size_t order = opts.closed_form_order;
    switch (family) {
    case Family::Identity: {
        p = normalize_pair(ComplexSeries::identity(SeriesKind::TaylorAtZero, order + 1),
                           ComplexSeries::identity(SeriesKind::LaurentAtInfinity, order));
        break;
    }
    case Family::Ellipse: {
        const double c = param_or(params, "c");
        if (!(c > 0.0 && c < 1.0))
            throw InvalidInput("catalog: ellipse needs 0 < c < 1");
        std::size_t M = 0;
        auto th = map_with_samples(StarDomain::ellipse(c), opts, M);
        std::vector<cplx> L(std::max<std::size_t>(order, 3));
        L[0] = 1.0;
        L[2] = c;
        p = normalize_pair(th.f, ComplexSeries::laurent(std::move(L)));
        p.samples = M;
        p.residuals["theodorsen_update"] = th.residual;
        p.residuals["theodorsen_iterations"] = th.iterations;
        p.residuals["aliasing"] = th.aliasing;
        p.params["c"] = c;
        break;
    }
    case Family::FourierBump: {
        const double eps = param_or(params, "eps");
        const double kd = param_or(params, "k");
        if (kd != std::floor(kd) || kd < 1 || kd > 1e6)
            throw InvalidInput("catalog: fourier_bump needs integer k >= 1");
        const int k = static_cast<int>(kd);
        if (!(std::abs(eps) < 1.0))
            throw InvalidInput("catalog: fourier_bump needs |eps| < 1");
        auto d = StarDomain::fourier_bump(eps, k);
        if (!(d.smoothness_bound < 1.0))
            throw InvalidInput("catalog: fourier_bump smoothness bound must be < 1");
        std::size_t M = 0, Minv = 0;
        auto in = map_with_samples(d, opts, M);
        auto out = map_with_samples(d.inverted(), opts, Minv);
        p = normalize_pair(in.f, exterior_via_inversion(out.f));
        p.samples = std::max(M, Minv);
        p.residuals["theodorsen_update"] = std::max(in.residual, out.residual);
        p.residuals["theodorsen_iterations"] = std::max(in.iterations, out.iterations);
        p.residuals["aliasing"] = std::max(in.aliasing, out.aliasing);
        p.params["eps"] = eps;
        p.params["k"] = kd;
        break;
    }
    }
    p.family_tag = family_name(family);
    const double br = boundary_residual(p, 1024);
    p.residuals["boundary"] = br;
    if (opts.strict && !(br <= opts.boundary_tol))
        throw NumericalFailure("catalog: boundary traces of f and g disagree by " +
                                   std::to_string(br),
                               br);
    return p;
}

WeldingPair catalog(const std::string& family_tag, const std::map<std::string, double>& params,
                    const CatalogOptions& opts) {
    return catalog(parse_family(family_tag), params, opts);
}

WeldingPair inverted_pair(const WeldingPair& pair) {
    WeldingPair q = normalize_pair(interior_via_inversion(pair.g), exterior_via_inversion(pair.f));
    q.family_tag = pair.family_tag + "_inverted";
    q.params = pair.params;
    q.samples = pair.samples;
    q.residuals["boundary"] = boundary_residual(q, 1024);
    return q;
}

double boundary_residual(const WeldingPair& pair, std::size_t M) {
    if (!fft::is_power_of_two(M))
        throw InvalidInput("boundary_residual: M must be a power of two");
    return std::max(one_sided(pair.f, pair.g, M), one_sided(pair.g, pair.f, M));
}

double min_image_separation(const ComplexSeries& s, double r, std::size_t n) {
    if (!fft::is_power_of_two(n))
        throw InvalidInput("min_image_separation: n must be a power of two");
    const auto v = sample_circle(s, r, n);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            best = std::min(best, std::abs(v[i] - v[j]));
    return best;
}

} // namespace wplab
