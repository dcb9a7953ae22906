#include "wplab/error.hpp"
#include "wplab/grunsky.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace wplab;

namespace {

constexpr double pi = std::numbers::pi;

WeldingPair quadratic_pair(double t, std::size_t order) {
    std::vector<cplx> f(order);
    f[1] = 1.0;
    f[2] = t;
    WeldingPair p;
    p.f = ComplexSeries::taylor(f);
    p.g = ComplexSeries::identity(SeriesKind::LaurentAtInfinity, order);
    p.family_tag = "quadratic";
    return p;
}

WeldingPair joukowski_pair(cplx scale, cplx shift, double c, std::size_t order) {
    std::vector<cplx> L(order);
    L[0] = scale;
    L[1] = shift;
    L[2] = scale * c;
    WeldingPair p;
    p.f = ComplexSeries::identity(SeriesKind::TaylorAtZero, order);
    p.g = ComplexSeries::laurent(L);
    return p;
}

const WeldingPair& pair_of(const std::string& tag, const std::map<std::string, double>& p) {
    static std::map<std::string, WeldingPair> cache;
    const std::string key = tag + (p.empty() ? "" : std::to_string(p.begin()->second));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, catalog(tag, p)).first;
    return it->second;
}

const WeldingPair& identity_pair() { return pair_of("identity", {}); }
const WeldingPair& ellipse(double c) { return pair_of("ellipse", {{"c", c}}); }
const WeldingPair& bump() { return pair_of("fourier_bump", {{"eps", 0.05}, {"k", 2}}); }

double closed_form(double c, int N) {
    double s = 0.0;
    for (int k = 1; k <= N; ++k)
        s += std::log1p(-std::pow(c, 2 * k));
    return s;
}

} // namespace

TEST_CASE("kernels of the identity pair") {
    const auto& p = identity_pair();
    const cplx z{0.3, 0.2}, w{-0.1, 0.5}, W{1.5, -0.7};
    CHECK(std::abs(kernel(p, 1, z, w)) < 1e-14);
    CHECK(std::abs(kernel(p, 4, W, 2.0 * W)) < 1e-14);
    CHECK(std::abs(kernel(p, 2, z, W) - 1.0 / (pi * (z - W) * (z - W))) < 1e-14);
    CHECK(std::abs(kernel(p, 3, W, z) - 1.0 / (pi * (W - z) * (W - z))) < 1e-14);
    CHECK_THROWS_AS(kernel(p, 1, z, W), InvalidInput);
    CHECK_THROWS_AS(kernel(p, 2, W, z), InvalidInput);
    CHECK_THROWS_AS(kernel(p, 5, z, w), InvalidInput);
}

TEST_CASE("K1 diagonal limit for z + t z^2") {
    for (double t : {0.1, 0.2}) {
        const auto p = quadratic_pair(t, 8);
        // -S(f)(0)/(6 pi) with S(f)(0) = -6 t^2
        CHECK(std::abs(kernel(p, 1, 0.0, 0.0) - t * t / pi) < 1e-14);
        // the limit joins the off-diagonal formula continuously
        const cplx z{0.1, 0.05};
        const cplx near = kernel(p, 1, z, z + 1e-3);
        const cplx at = kernel(p, 1, z, z + 5e-5);
        CHECK(std::abs(near - at) < 1e-5);
    }
}

TEST_CASE("B1 oracles for z + t z^2") {
    for (double t : {0.1, 0.2}) {
        const auto p = quadratic_pair(t, required_taylor_order(1));
        const Matrix B = build_B1(p, 1);
        CHECK(std::abs(std::abs(B(0, 0)) - t * t) < 1e-12);
        CHECK(std::abs(logdet_potential(B) - std::log(1.0 - std::pow(t, 4))) < 1e-12);
    }
    // stable under doubling the working order
    const auto p = quadratic_pair(0.3, required_taylor_order(16));
    const auto q = quadratic_pair(0.3, 2 * required_taylor_order(16));
    CHECK((build_B1(p, 16) - build_B1(q, 16)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(build_B1(quadratic_pair(0.3, 10), 16), InvalidInput);
}

TEST_CASE("identity pair blocks") {
    const auto t = build_truncation(identity_pair(), 16);
    CHECK(t.B1.norm() == 0.0);
    CHECK(t.B4.norm() == 0.0);
    CHECK((t.B2 - Matrix::Identity(16, 16)).norm() < 1e-14);
    CHECK((t.B3 - Matrix::Identity(16, 16)).norm() < 1e-14);
    for (double r : grunsky_identity_residual(t))
        CHECK(r <= 1e-12);
}

TEST_CASE("B4 of z + c/z is diag(c^k) and affine invariant") {
    const double c = 0.4;
    const int N = 24;
    const Matrix B = build_B4(joukowski_pair(1.0, 0.0, c, required_laurent_order(N)), N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const cplx expected = i == j ? std::pow(c, i + 1) : 0.0;
            CHECK(std::abs(B(i, j) - expected) < 1e-15);
        }
    const Matrix B2 = build_B4(joukowski_pair(cplx{2.0, 1.0}, cplx{0.3, -4.0}, c, required_laurent_order(N)), N);
    CHECK((B - B2).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(logdet_potential(B) - closed_form(c, N)) < 1e-14);
}

TEST_CASE("logdet_potential") {
    const Matrix Z = Matrix::Zero(8, 8);
    const auto r = logdet_potential(Z, {2, 4, 8});
    for (double v : r.estimates)
        CHECK(v == 0.0);
    CHECK(r.residual_tail == 0.0);
    CHECK_THROWS_AS(logdet_potential(Z, {4, 2}), InvalidInput);
    CHECK_THROWS_AS(logdet_potential(Matrix::Identity(3, 3)), NumericalFailure);

    const auto rep = logdet_potential(build_B4(ellipse(0.3), 64), {8, 16, 32, 64});
    CHECK(rep.extrapolated == doctest::Approx(closed_form(0.3, 64)).epsilon(1e-14));
    for (std::size_t i = 1; i < rep.estimates.size(); ++i)
        CHECK(rep.estimates[i] <= rep.estimates[i - 1] + 1e-12);
}

TEST_CASE("positivity, norms and B3 = B2^T on the catalog") {
    for (const WeldingPair* p : {&identity_pair(), &ellipse(0.1), &ellipse(0.3), &ellipse(0.5), &bump()}) {
        CAPTURE(p->family_tag);
        const auto t = build_truncation(*p, 32);
        CHECK((t.B3 - t.B2.transpose()).cwiseAbs().maxCoeff() <= 1e-10);
        double prev = 0.0;
        for (int n : {4, 8, 16, 32}) {
            const double s1 = spectral_norm(t.B1.topLeftCorner(n, n));
            CHECK(s1 >= prev - 1e-14);
            CHECK(s1 < 1.0);
            prev = s1;
        }
        CHECK(spectral_norm(t.B4) < 1.0);
        const auto r1 = logdet_potential(t.B1, {4, 8, 16, 32});
        const auto r4 = logdet_potential(t.B4, {4, 8, 16, 32});
        for (std::size_t i = 1; i < 4; ++i) {
            CHECK(r1.estimates[i] <= r1.estimates[i - 1] + 1e-12);
            CHECK(r4.estimates[i] <= r4.estimates[i - 1] + 1e-12);
        }
        CHECK(r1.extrapolated <= 0.0);
    }
}

TEST_CASE("Grunsky equalities") {
    SUBCASE("bump: small and decreasing in the leading block") {
        const auto a = grunsky_identity_residual(build_truncation(bump(), 32));
        const auto b = grunsky_identity_residual(build_truncation(bump(), 64));
        for (int i = 0; i < 4; ++i) {
            CHECK(b[i] <= 1e-5);
            CHECK(a[i] <= 1e-5);
        }
        CHECK(b[0] < a[0]);
        CHECK(b[3] < a[3]);
    }
    SUBCASE("ellipse: the equalities hold once the inner sums are long") {
        const auto t = build_truncation(ellipse(0.1), 64);
        for (double r : grunsky_identity_residual(t, 8))
            CHECK(r <= 1e-12);
    }
}

TEST_CASE("iterated kernels") {
    const auto ti = build_truncation(identity_pair(), 16);
    CHECK(iterated_kernel_diag(ti, 1, cplx{0.3, 0.1}) == 0.0);
    CHECK(O1_diag(ti, cplx{0.3, 0.1}).value == 0.0);

    // n = 1 at z = 0 for z + t z^2: t^4/pi to leading order
    const double t = 0.05;
    const auto tq = build_truncation(quadratic_pair(t, required_taylor_order(16)), 16);
    CHECK(iterated_kernel_diag(tq, 1, 0.0) == doctest::Approx(std::pow(t, 4) / pi).epsilon(1e-2));
    CHECK_THROWS_AS(iterated_kernel_diag(tq, 1, 1.0), InvalidInput);
    CHECK_THROWS_AS(iterated_kernel_diag(tq, 0, 0.0), InvalidInput);

    const auto te = build_truncation(ellipse(0.3), 32);
    const double q = std::pow(spectral_norm(te.B1), 2);
    for (cplx z : {cplx{0.0}, cplx{0.4, 0.3}, cplx{-0.7, 0.1}}) {
        double prev = iterated_kernel_diag(te, 1, z);
        CHECK(prev >= 0.0);
        for (int n = 2; n <= 5; ++n) {
            const double v = iterated_kernel_diag(te, n, z);
            CHECK(v >= 0.0);
            CHECK(v <= q * prev + 1e-15);
            prev = v;
        }
        const auto o = O1_diag(te, z);
        CHECK(o.value >= iterated_kernel_diag(te, 1, z));
        CHECK(o.tail_bound <= 1e-12);
    }

    // diagonal B4 of the ellipse: closed form sum_k -log(1 - c^{2k}) |e*_k(z)|^2
    const double c = 0.3;
    const cplx z{1.3, 0.4};
    double expected = 0.0;
    for (int k = 1; k <= 32; ++k)
        expected += -std::log1p(-std::pow(c, 2 * k)) * k / pi * std::pow(std::abs(z), -2.0 * k - 2.0);
    const auto o = O1_diag(te, z, 1e-14, Side::Exterior);
    CHECK(o.value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("inversion symmetry") {
    const auto i0 = inversion_check(identity_pair(), 16);
    CHECK(i0.s2_pair_B1 == 0.0);
    CHECK(i0.s2_inverted_B1 == 0.0);
    const auto e = inversion_check(ellipse(0.3), 64);
    const double cf = closed_form(0.3, 64);
    CHECK(std::abs(e.s2_pair_B1 - cf) <= 1e-6);
    CHECK(std::abs(e.s2_inverted_B1 - cf) <= 1e-6);
    CHECK(std::abs(e.s2_pair_B4 - cf) <= 1e-12);
    const auto b = inversion_check(bump(), 64);
    CHECK(std::abs(b.s2_pair_B1 - b.s2_inverted_B1) <= 1e-6);
    CHECK(std::abs(b.s2_pair_B1 - b.s2_pair_B4) <= 1e-6);
}
