#include "wplab/error.hpp"
#include "wplab/liouville.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace wplab;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("Gauss-Legendre and grids") {
    auto [x, w] = gauss_legendre(10, 0.0, 1.0);
    double s = 0.0;
    for (int i = 0; i < 10; ++i)
        s += w[i] * std::pow(x[i], 19);
    CHECK(s == doctest::Approx(1.0 / 20).epsilon(1e-14));
    for (auto [nr, nt] : default_s1_grids()) {
        const auto g = QuadratureGrid::make(nr, nt);
        CHECK(std::abs(g.disk_area() - pi) <= 1e-12);
        for (double v : g.w)
            CHECK(v > 0.0);
    }
    CHECK_THROWS_AS(QuadratureGrid::make(16, 100), InvalidInput);
}

TEST_CASE("S1 of the identity pair vanishes") {
    const auto p = catalog("identity", {});
    const auto r = s1(p);
    for (double v : r.estimates)
        CHECK(std::abs(v) <= 1e-14);
}

TEST_CASE("S1 quadrature matches the Parseval form") {
    for (const auto& [tag, par] : std::vector<std::pair<std::string, std::map<std::string, double>>>{
             {"ellipse", {{"c", 0.3}}}, {"fourier_bump", {{"eps", 0.05}, {"k", 2}}}}) {
        const auto p = catalog(tag, par);
        const double q = s1(p, QuadratureGrid::make(256, 512));
        CHECK(q == doctest::Approx(s1_series(p)).epsilon(1e-10));
        CHECK(q > 0.0);
    }
}

TEST_CASE("S1 ladder converges") {
    const auto p = catalog("ellipse", {{"c", 0.3}});
    const auto r = s1(p);
    REQUIRE(r.estimates.size() == 3);
    const double d1 = std::abs(r.estimates[1] - r.estimates[0]);
    const double d2 = std::abs(r.estimates[2] - r.estimates[1]);
    CHECK((d2 <= d1 / 4 || d2 <= 1e-12));
    CHECK(r.residual_tail == d2);
}

TEST_CASE("identity report") {
    const auto z = identity_report(catalog("identity", {}), QuadratureGrid::make(64, 128), 16);
    CHECK(z.S1 == 0.0);
    CHECK(z.S2_univ_via_B1 == 0.0);
    CHECK(z.residual_identity == 0.0);

    const auto p = catalog("ellipse", {{"c", 0.3}});
    const auto r = identity_report(p, QuadratureGrid::make(256, 512), 64);
    CHECK(r.residual_operators <= 1e-6);
    CHECK(r.residual_identity_rel <= 1e-3);
    CHECK(r.S1 >= 0.0);

    // joint refinement of grid and order
    const auto coarse = identity_report(p, QuadratureGrid::make(16, 32), 8);
    CHECK(r.residual_identity < coarse.residual_identity);
}

TEST_CASE("integrand cap flags rough curves") {
    const auto p = catalog("ellipse", {{"c", 0.3}});
    S1Options o;
    o.integrand_cap = 1.0;
    CHECK_THROWS_AS(s1(p, QuadratureGrid::make(64, 128), o), NumericalFailure);
}

TEST_CASE("classical action report") {
    const auto a = s_cl_report(0.0, 2);
    CHECK(a.S_cl == 16 * pi);
    CHECK(a.slack == 0.0);
    CHECK(a.is_fuchsian_point);
    const auto b = s_cl_report(0.1, 2);
    CHECK(b.S_cl == doctest::Approx(16 * pi - 1.2 * pi).epsilon(1e-15));
    CHECK(b.slack == doctest::Approx(1.2 * pi).epsilon(1e-14));
    CHECK(!b.is_fuchsian_point);
    for (double s : {1e-15, 1e-9, 0.5, 3.0}) {
        CHECK(s_cl_report(s, 3).S_cl < s_cl_report(s, 3).bound);
        CHECK(!s_cl_report(s, 3).is_fuchsian_point);
    }
    const auto c = s_cl_report(-1e-14, 2);
    CHECK(c.S_cl == 16 * pi);
    CHECK(c.s2_dg == 0.0);
    CHECK(c.is_fuchsian_point);
    CHECK_THROWS_AS(s_cl_report(-0.1, 2), InvalidInput);
    CHECK_THROWS_AS(s_cl_report(0.0, 1), InvalidInput);
}
