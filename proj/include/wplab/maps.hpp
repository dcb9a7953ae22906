#pragma once

#include "wplab/moebius.hpp"
#include "wplab/series.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace wplab {

/// Domain star-like about 0 with boundary r = rho(theta).
struct StarDomain {
    std::string tag;
    std::vector<double> params;
    std::function<double(double)> log_rho; ///< 2 pi-periodic
    double smoothness_bound = 0.0;          ///< max |rho'/rho|

    double rho(double theta) const;

    static StarDomain circle();
    /// Ellipse with semi-axes 1 + c and 1 - c, 0 < c < 1.
    static StarDomain ellipse(double c);
    /// rho = 1 + eps cos(k theta).
    static StarDomain fourier_bump(double eps, int k);
    /// Trigonometric interpolant of M uniform samples of rho.
    static StarDomain from_samples(std::vector<double> rho);

    /// The image under w -> 1/conj(w): radius 1/rho.
    StarDomain inverted() const;
};

struct TheodorsenOptions {
    std::size_t samples = 1024;
    double tol = 1e-14;
    int max_iterations = 5000;
    /// Domains rougher than this are refused outright.
    double max_smoothness = 3.0;
};

struct TheodorsenResult {
    std::vector<double> phi; ///< boundary correspondence at t_j = 2 pi j / M, before the rotation gauge
    ComplexSeries f = ComplexSeries::identity(SeriesKind::TaylorAtZero, 2); ///< order M/2, f(0) = 0, f'(0) > 0
    int iterations = 0;
    double residual = 0.0;     ///< last sup-norm update
    double damping = 1.0;
    double aliasing = 0.0;     ///< max |a_k|, k in [M/4, M/2), over |a_1|
};

/// Riemann map of the unit disk onto a star domain by Theodorsen iteration
/// phi = t + conj[log rho(phi)], with the conjugation applied spectrally.
TheodorsenResult theodorsen_interior(const StarDomain& domain, const TheodorsenOptions& opts = {});

/// g(z) = 1/conj(f_inv(1/conj z)) as a Laurent series; f_inv is a Taylor
/// series with f_inv(0) = 0, f_inv'(0) != 0.
ComplexSeries exterior_via_inversion(const ComplexSeries& f_inv);
/// The same involution in the other direction: Laurent g -> Taylor f.
ComplexSeries interior_via_inversion(const ComplexSeries& g);

enum class Family { Identity, Ellipse, FourierBump };

Family parse_family(const std::string& tag);
std::string family_name(Family f);

/// Normalized welding pair: f(0) = 0, f'(0) = 1 on the disk; g with g(inf) = inf
/// on the exterior; both parameterize the same curve.
struct WeldingPair {
    ComplexSeries f = ComplexSeries::identity(SeriesKind::TaylorAtZero, 2);
    ComplexSeries g = ComplexSeries::identity(SeriesKind::LaurentAtInfinity, 1);
    cplx g_prime_at_infinity{1.0};
    std::string family_tag = "identity";
    std::map<std::string, double> params;
    std::size_t samples = 0; ///< Theodorsen sample count, 0 for closed forms
    std::map<std::string, double> residuals;

    cplx eval_f(cplx z) const { return f.evaluate(z); }
    cplx eval_g(cplx z) const { return g.evaluate(z); }
};

WeldingPair normalize_pair(const ComplexSeries& raw_f, const ComplexSeries& raw_g);

struct CatalogOptions {
    /// Theodorsen sample count; 0 picks it automatically (see `auto_samples`).
    std::size_t samples = 0;
    std::size_t max_samples = 65536;
    /// Working order used for closed-form series.
    std::size_t closed_form_order = 1024;
    double boundary_tol = 1e-8;
    /// Throw when the boundary residual exceeds boundary_tol; otherwise it is
    /// only recorded in `residuals`.
    bool strict = true;
};

/// Catalog of pairs of analytic quasicircles:
///   identity                      f = g = id
///   ellipse      {c}              g = z + c/z, f by Theodorsen
///   fourier_bump {eps, k}         f and g by Theodorsen (g through inversion)
WeldingPair catalog(Family family, const std::map<std::string, double>& params,
                    const CatalogOptions& opts = {});
WeldingPair catalog(const std::string& family_tag, const std::map<std::string, double>& params,
                    const CatalogOptions& opts = {});

/// The pair of the inverted point: (1/conj g(1/conj z), 1/conj f(1/conj z)), renormalized.
WeldingPair inverted_pair(const WeldingPair& pair);

/// Max over M boundary samples f(e^{it}) of the distance to the curve g(S^1).
double boundary_residual(const WeldingPair& pair, std::size_t M = 1024);

/// Smallest pairwise distance between images of n points on |z| = r.
double min_image_separation(const ComplexSeries& s, double r, std::size_t n = 512);

// Schwarzian derivative S(h) = (h''/h')' - (h''/h')^2 / 2.
cplx schwarzian(const ComplexSeries& h, cplx z);
/// Derivatives by the Cauchy integral on the circle |zeta - z| = radius.
cplx schwarzian(const std::function<cplx(cplx)>& h, cplx z, double radius, int points = 64);

struct ThetaOptions {
    double boundary_tube = 1e-3; ///< refuse points whose preimage is this close to S^1
    double newton_tol = 1e-13;
    int newton_max = 100;
};

/// theta(w) = S(f^{-1})(w) on f(D), S(g^{-1})(w) on g(D*).
cplx theta(const WeldingPair& pair, cplx w, const ThetaOptions& opts = {});
/// S(h^{-1})(w) for an interior Taylor map h alone.
cplx theta_interior(const ComplexSeries& h, cplx w, const ThetaOptions& opts = {});

/// JSON document {family_tag, params, taylor_coeffs, laurent_coeffs,
/// g_prime_at_infinity, M, residuals}; coefficients as [re, im] pairs.
/// Doubles are written in shortest round-trip form, so import(export(p))
/// reproduces the coefficient arrays bit for bit.
std::string export_pair_json(const WeldingPair& pair);
WeldingPair import_pair_json(const std::string& text);

} // namespace wplab
