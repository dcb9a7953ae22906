#include "wplab/error.hpp"
#include "wplab/fuchsian.hpp"
#include "wplab/grunsky.hpp"
#include "wplab/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace wplab {

namespace {

constexpr double pi = std::numbers::pi;

// Interior angle of the regular octagon with vertices at radius rv, measured
// at the vertex v = rv e^{i pi/8} between the geodesics to its two neighbours.
// phi_v moves v to 0, where geodesics through it become diameters.
double vertex_angle(double rv) {
    const cplx v = std::polar(rv, pi / 8);
    const auto phi = [v](cplx z) { return (z - v) / (1.0 - std::conj(v) * z); };
    const double d = std::abs(std::arg(phi(std::polar(rv, -pi / 8))) -
                              std::arg(phi(std::polar(rv, 3 * pi / 8))));
    return std::min(d, 2 * pi - d);
}

// Boundary radius of the domain along the ray at angle t.
double ray_exit(const GroupEnumeration& e, double t) {
    double lo = 0.0, hi = 1.0 - 1e-12;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (in_dirichlet_domain(e, std::polar(mid, t), 0.0))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Integral over the domain of h(r e^{it}) r dr dt, one Gauss rule in t per side
// sector, with `radial(t, R)` the integral along the ray up to R.
template <class Radial>
double sector_rule(const GroupEnumeration& e, int nodes, Radial radial) {
    const auto [x, w] = gauss_legendre(nodes, -pi / 8, pi / 8);
    double total = 0.0;
    for (int k = 0; k < 8; ++k)
        for (int i = 0; i < nodes; ++i) {
            const double t = k * pi / 4 + x[i];
            total += w[i] * radial(t, ray_exit(e, t));
        }
    return total;
}

DomainIntegral checked(double fine, double coarse, double tol) {
    DomainIntegral d{fine, coarse, std::abs(fine - coarse)};
    if (!(d.difference <= tol))
        throw NumericalFailure("domain quadrature: refinements disagree", d.difference);
    return d;
}

const GroupEnumeration& octagon_neighbours(const FuchsianGroup& g) {
    // Orbit points of words of length <= 2 determine the octagon exactly.
    static thread_local std::map<double, GroupEnumeration> cache;
    auto it = cache.find(g.translation_length);
    if (it == cache.end())
        it = cache.emplace(g.translation_length, enumerate(g, 2)).first;
    return it->second;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

FuchsianGroup octagon_group() {
    double lo = 1e-6, hi = 1.0 - 1e-9;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        // The angle shrinks from pi - pi/4 (Euclidean octagon) towards 0 as rv -> 1.
        if (vertex_angle(mid) > pi / 4)
            lo = mid;
        else
            hi = mid;
    }
    FuchsianGroup g;
    g.vertex_radius = 0.5 * (lo + hi);
    // Side midpoint m: the geodesic through two adjacent vertices is a circle
    // orthogonal to S^1 centred at x0 on the midpoint ray.
    const double rv = g.vertex_radius;
    const double x0 = (rv * rv + 1.0) / (2.0 * rv * std::cos(pi / 8));
    const double m = x0 - std::sqrt(x0 * x0 - 1.0);
    g.translation_length = 4.0 * std::atanh(m);
    const auto T = MoebiusTransform::real_translation(g.translation_length);
    for (int k = 0; k < 8; ++k)
        g.generators.push_back(MoebiusTransform::rotation(k * pi / 4) * T *
                               MoebiusTransform::rotation(-k * pi / 4));
    g.relation_word = {0, 5, 2, 7, 4, 1, 6, 3};
    g.genus = 2;
    return g;
}

double relation_residual(const FuchsianGroup& group) {
    MoebiusTransform p;
    for (int i : group.relation_word)
        p = p * group.generators.at(i);
    return p.distance_up_to_sign(MoebiusTransform::identity());
}

GroupEnumeration enumerate(const FuchsianGroup& group, int L) {
    if (L < 0 || L > 8)
        throw InvalidInput("enumerate: word length must be in 0..8");
    GroupEnumeration e;
    e.max_word_length = L;
    e.elements.push_back(MoebiusTransform::identity());
    e.word_length.push_back(0);
    // |a| = cosh(d(0, gamma 0)/2) is invariant under the sign, so it indexes candidates.
    std::multimap<double, std::size_t> index;
    index.emplace(1.0, 0);
    const auto find = [&](const MoebiusTransform& m) {
        const double key = std::abs(m.a());
        const double tol = 1e-8 * std::max(1.0, key);
        for (auto it = index.lower_bound(key - tol); it != index.end() && it->first <= key + tol; ++it)
            if (e.elements[it->second].distance_up_to_sign(m) <= 1e-8 * std::max(1.0, m.max_abs_entry()))
                return true;
        return false;
    };
    std::vector<std::size_t> frontier{0};
    for (int len = 1; len <= L; ++len) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier)
            for (const auto& gen : group.generators) {
                const MoebiusTransform m = e.elements[idx] * gen;
                if (find(m))
                    continue;
                index.emplace(std::abs(m.a()), e.elements.size());
                next.push_back(e.elements.size());
                e.elements.push_back(m);
                e.word_length.push_back(len);
            }
        frontier = std::move(next);
    }
    return e;
}

bool in_dirichlet_domain(const GroupEnumeration& e, cplx z, double slack) {
    if (!(std::abs(z) < 1.0))
        throw InvalidInput("in_dirichlet_domain: z must lie in the unit disk");
    const double z2 = std::norm(z);
    for (std::size_t i = 1; i < e.elements.size(); ++i) {
        const cplx p = e.elements[i](0.0);
        if (z2 * (1.0 - std::norm(p)) > std::norm(z - p) + slack)
            return false;
    }
    return true;
}

DomainIntegral domain_area_integral(const FuchsianGroup& group, const DomainQuadratureOptions& opts) {
    const auto& e = octagon_neighbours(group);
    // int_0^R r dr / (pi (1 - r^2)^2) = R^2 / (2 pi (1 - R^2)).
    const auto radial = [](double, double R) { return R * R / (2.0 * pi * (1.0 - R * R)); };
    const int n = std::max(opts.angular_nodes, 2);
    return checked(sector_rule(e, n, radial), sector_rule(e, n / 2, radial), opts.tol);
}

DomainIntegral domain_integral(const FuchsianGroup& group, const std::function<double(cplx)>& h,
                               const DomainQuadratureOptions& opts) {
    const auto& e = octagon_neighbours(group);
    const auto [x, w] = gauss_legendre(opts.radial_nodes, 0.0, 1.0);
    const auto radial = [&](double t, double R) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = R * x[i];
            s += w[i] * r * h(std::polar(r, t));
        }
        return s * R;
    };
    const int n = std::max(opts.angular_nodes, 2);
    return checked(sector_rule(e, n, radial), sector_rule(e, n / 2, radial), opts.tol);
}

cplx bergman_kernel(cplx z, cplx w) {
    const cplx d = 1.0 - z * std::conj(w);
    return 1.0 / (pi * d * d);
}

double automorphy_residual(const std::function<cplx(cplx, cplx)>& K, const MoebiusTransform& gamma,
                           const std::vector<std::pair<cplx, cplx>>& points, KernelForm form) {
    double worst = 0.0;
    for (const auto& [z, w] : points) {
        const cplx dw = form == KernelForm::Holomorphic ? gamma.derivative(w)
                                                        : std::conj(gamma.derivative(w));
        const cplx lhs = K(gamma(z), gamma(w)) * gamma.derivative(z) * dw;
        worst = std::max(worst, std::abs(lhs - K(z, w)));
    }
    return worst;
}

std::vector<double> basepoint_trace_terms(const FuchsianGroup& group, const WeldingPair& pair,
                                          int kmax, const DomainQuadratureOptions& opts) {
    if (kmax < 0)
        throw InvalidInput("basepoint_trace_terms: k must be >= 0");
    {
        const int n = 8;
        const auto [B2, B3] = build_B2_B3(pair, n);
        const double off = (B2 - Matrix::Identity(n, n)).norm() + build_B1(pair, n).norm() +
                           build_B4(pair, n).norm();
        if (off > 1e-12)
            throw InvalidInput("basepoint_trace_terms: pair is not the basepoint");
    }
    const int N = 128;
    const Matrix B2 = build_B2_B3(pair, N).first;
    const Matrix K = B2 * B2.adjoint();
    std::vector<double> terms;
    Matrix P = Matrix::Identity(N, N);
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0)
            P = P * K;
        const auto h = [&](cplx z) {
            Eigen::VectorXcd v(N);
            cplx p = 1.0;
            for (int m = 1; m <= N; ++m) {
                v(m - 1) = std::conj(std::sqrt(m / pi) * p);
                p *= z;
            }
            return v.dot(P * v).real();
        };
        terms.push_back(domain_integral(group, h, opts).value);
    }
    return terms;
}

double basepoint_trace_term(const FuchsianGroup& group, const WeldingPair& pair, int k,
                            const DomainQuadratureOptions& opts) {
    return basepoint_trace_terms(group, pair, k, opts).back();
}

double alternating_trace_sum(const std::vector<double>& terms, int n) {
    if (n < 0 || n >= static_cast<int>(terms.size()))
        throw InvalidInput("alternating_trace_sum: need terms 0..n");
    double s = 0.0;
    for (int k = 0; k <= n; ++k)
        s += (k % 2 ? -1.0 : 1.0) * binomial(n, k) * terms[k];
    return s;
}

double alternating_trace_sum(const FuchsianGroup& group, const WeldingPair& pair, int n,
                             const DomainQuadratureOptions& opts) {
    if (n < 0)
        throw InvalidInput("alternating_trace_sum: n must be >= 0");
    return alternating_trace_sum(basepoint_trace_terms(group, pair, n, opts), n);
}

} // namespace wplab
