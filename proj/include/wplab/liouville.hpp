#pragma once

#include "wplab/grunsky.hpp"
#include "wplab/maps.hpp"

#include <utility>
#include <vector>

namespace wplab {

/// Gauss-Legendre in r on (0, 1) times the uniform rule in theta. The exterior
/// is integrated on the disk through z = 1/u.
struct QuadratureGrid {
    int n_r = 0;
    int n_theta = 0;
    std::vector<double> r;
    std::vector<double> w; ///< includes the Jacobian r, excludes the angular weight

    static QuadratureGrid make(int n_r, int n_theta);
    /// sum w * 2 pi, which is pi up to rounding.
    double disk_area() const;
};

/// Gauss-Legendre nodes and weights on (a, b).
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a = -1.0, double b = 1.0);

struct S1Terms {
    double interior = 0.0;   ///< integral over D of |f''/f'|^2
    double exterior = 0.0;   ///< integral over D* of |g''/g'|^2
    double log_term = 0.0;   ///< -4 pi log |g'(inf)|
    double max_integrand = 0.0;
    double total() const { return interior + exterior + log_term; }
};

struct S1Options {
    /// Integrand values past this mark a curve outside the Weil-Petersson class.
    double integrand_cap = 1e12;
};

S1Terms s1_terms(const WeldingPair& pair, const QuadratureGrid& grid, const S1Options& opts = {});

/// Default refinement ladder (64,128), (128,256), (256,512).
std::vector<std::pair<int, int>> default_s1_grids();

/// S1 over a ladder of grids; `orders` holds n_r of each grid.
ConvergenceReport s1(const WeldingPair& pair,
                     const std::vector<std::pair<int, int>>& grids = default_s1_grids(),
                     const S1Options& opts = {});
double s1(const WeldingPair& pair, const QuadratureGrid& grid, const S1Options& opts = {});

/// Parseval form pi sum_k |h_k|^2/(k + 1) for h = f''/f' plus the exterior
/// analogue; exact for the truncated series, used as an independent oracle.
double s1_series(const WeldingPair& pair);

struct IdentityReport {
    double S1 = 0.0;
    double S2_univ_via_B1 = 0.0;
    double S2_univ_via_B4 = 0.0;
    double residual_identity = 0.0;     ///< |S1 + 12 pi S2_univ(B1)|
    double residual_identity_rel = 0.0; ///< divided by max(1, |S1|)
    double residual_operators = 0.0;    ///< |via_B1 - via_B4|
    double residual_operators_rel = 0.0;
    std::pair<int, int> grid;
    int N = 0;
    S1Terms terms;
};

IdentityReport identity_report(const WeldingPair& pair, const QuadratureGrid& grid, int N,
                               const S1Options& opts = {});

struct SclReport {
    double S_cl = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    bool is_fuchsian_point = false;
    int genus = 2;
    double s2_dg = 0.0;
};

/// S_cl = -12 pi s2_dg + 8 pi (2g - 2).
SclReport s_cl_report(double s2_dg, int genus);

} // namespace wplab
