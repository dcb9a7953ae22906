#include "wplab/error.hpp"
#include "wplab/fuchsian.hpp"
#include "wplab/grunsky.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace wplab;

namespace {

constexpr double pi = std::numbers::pi;

const FuchsianGroup& group() {
    static const FuchsianGroup g = octagon_group();
    return g;
}

const WeldingPair& basepoint() {
    static const WeldingPair p = catalog("identity", {});
    return p;
}

} // namespace

TEST_CASE("octagon group") {
    const auto& g = group();
    REQUIRE(g.generators.size() == 8);
    CHECK(relation_residual(g) <= 1e-10);
    // regular octagon with angles pi/4: cosh of half the pairing length is 1 + sqrt 2,
    // the vertex radius is 2^{-1/4}
    CHECK(std::cosh(g.translation_length / 2) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-13));
    CHECK(g.vertex_radius == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-13));
    for (int k = 0; k < 8; ++k) {
        const auto& G = g.generators[k];
        CHECK(std::abs(G.det() - 1.0) <= 1e-12);
        CHECK(std::abs(G.trace()) > 2.0);
        CHECK(G.distance_up_to_sign(g.generators[(k + 4) % 8].inverse()) <= 1e-12);
        for (int j = 0; j < 64; ++j)
            CHECK(std::abs(std::abs(G(std::polar(1.0, 2 * pi * j / 64))) - 1.0) <= 1e-12);
    }
}

TEST_CASE("enumeration") {
    const auto& g = group();
    CHECK(enumerate(g, 0).elements.size() == 1);
    CHECK(enumerate(g, 1).elements.size() == 9);
    std::size_t prev = 0, bound = 1, words = 8;
    for (int L = 0; L <= 4; ++L) {
        if (L > 0) {
            bound += words;
            words *= 7;
        }
        const auto e = enumerate(g, L);
        CHECK(e.elements.size() >= prev);
        CHECK(e.elements.size() <= bound);
        prev = e.elements.size();
    }
    const auto e = enumerate(g, 3);
    // distinct up to sign, closed under inverses, closed under short products
    const auto contains = [&](const MoebiusTransform& m) {
        for (const auto& x : e.elements)
            if (x.distance_up_to_sign(m) <= 1e-8 * std::max(1.0, m.max_abs_entry()))
                return true;
        return false;
    };
    for (std::size_t i = 0; i < e.elements.size(); i += 7)
        for (std::size_t j = i + 1; j < e.elements.size(); ++j)
            CHECK(e.elements[i].distance_up_to_sign(e.elements[j]) > 1e-8);
    for (const auto& x : e.elements)
        CHECK(contains(x.inverse()));
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, e.elements.size() - 1);
    for (int i = 0; i < 200; ++i) {
        const std::size_t a = pick(rng), b = pick(rng);
        if (e.word_length[a] + e.word_length[b] <= 3)
            CHECK(contains(e.elements[a] * e.elements[b]));
    }
    CHECK_THROWS_AS(enumerate(g, 9), InvalidInput);
    CHECK_THROWS_AS(enumerate(g, -1), InvalidInput);
}

TEST_CASE("Dirichlet domain") {
    const auto& g = group();
    const auto e = enumerate(g, 2);
    CHECK(in_dirichlet_domain(e, 0.0));
    for (const auto& G : g.generators)
        CHECK(!in_dirichlet_domain(e, G(0.0)));
    for (int k = 0; k < 8; ++k) {
        const double t = pi / 8 + k * pi / 4;
        CHECK(in_dirichlet_domain(e, std::polar(g.vertex_radius, t), 1e-12));
        CHECK(!in_dirichlet_domain(e, std::polar(g.vertex_radius + 1e-6, t)));
        CHECK(in_dirichlet_domain(e, std::polar(g.vertex_radius - 1e-6, t)));
    }
    CHECK_THROWS_AS(in_dirichlet_domain(e, 1.0), InvalidInput);
}

TEST_CASE("translates of the domain tile a neighbourhood of 0") {
    const auto& g = group();
    const auto near = enumerate(g, 2);
    const auto e = enumerate(g, 4);
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    int tested = 0;
    for (int i = 0; i < 10000; ++i) {
        const cplx z{u(rng), u(rng)};
        if (std::abs(z) > 0.8)
            continue;
        ++tested;
        int hits = 0;
        for (const auto& G : e.elements)
            if (in_dirichlet_domain(near, G.inverse()(z), 0.0))
                ++hits;
        CHECK(hits == 1);
    }
    CHECK(tested > 7000);
}

TEST_CASE("area integral") {
    const auto a = domain_area_integral(group());
    CHECK(std::abs(a.value - 1.0) <= 1e-4);
    CHECK(std::abs(a.coarse - 1.0) <= 1e-4);
    CHECK(a.difference <= 1e-4);
    CHECK(std::abs(bergman_kernel(0.0, 0.0) - 1.0 / pi) < 1e-16);
    const auto b = domain_integral(group(), [](cplx z) { return bergman_kernel(z, z).real(); });
    CHECK(std::abs(b.value - a.value) <= 1e-8);
}

TEST_CASE("automorphy at the basepoint") {
    const auto& g = group();
    std::vector<std::pair<cplx, cplx>> inside, mixed;
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> r(0.0, 0.8), t(0.0, 2 * pi), R(1.2, 3.0);
    for (int i = 0; i < 32; ++i) {
        inside.emplace_back(std::polar(r(rng), t(rng)), std::polar(r(rng), t(rng)));
        mixed.emplace_back(std::polar(r(rng), t(rng)), std::polar(R(rng), t(rng)));
    }
    const auto& p = basepoint();
    const auto K1 = [&](cplx z, cplx w) { return kernel(p, 1, z, w); };
    const auto K2 = [&](cplx z, cplx w) { return kernel(p, 2, z, w); };
    for (const auto& G : g.generators) {
        CHECK(automorphy_residual(bergman_kernel, G, inside, KernelForm::Sesquiholomorphic) <= 1e-10);
        CHECK(automorphy_residual(K1, G, inside, KernelForm::Holomorphic) == 0.0);
        CHECK(automorphy_residual(K2, G, mixed, KernelForm::Holomorphic) <= 1e-10);
    }
    // the Bergman kernel is not invariant in the holomorphic form
    CHECK(automorphy_residual(bergman_kernel, g.generators[0], inside, KernelForm::Holomorphic) > 1e-3);
}

TEST_CASE("basepoint trace terms") {
    const auto terms = basepoint_trace_terms(group(), basepoint(), 3);
    REQUIRE(terms.size() == 4);
    CHECK(std::abs(terms[1] - 1.0) <= 1e-4);
    CHECK(std::abs(alternating_trace_sum(terms, 1)) <= 2e-4);
    CHECK(std::abs(alternating_trace_sum(terms, 2)) <= 1e-3);
    CHECK(std::abs(alternating_trace_sum(terms, 3)) <= 1e-3);
    const auto e = catalog("ellipse", {{"c", 0.1}});
    CHECK_THROWS_AS(basepoint_trace_terms(group(), e, 1), InvalidInput);
}
