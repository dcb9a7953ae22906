#pragma once

#include "wplab/maps.hpp"

#include <Eigen/Dense>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace wplab {

using Matrix = Eigen::MatrixXcd;

/// Log of a bivariate series q(x, y) with q(0, 0) = 1, q given as coefficient
/// matrix q(i, j) of x^i y^j. Returns l with exp(l) = q through rows/cols
/// 0..rows-1 / 0..cols-1. `x_first` selects the variable the recursion runs in.
Matrix bivariate_log(const Matrix& q, bool x_first = true);

/// Truncated operators in the bases e_n(z) = sqrt(n/pi) z^{n-1} on the disk and
/// e*_n(w) = sqrt(n/pi) w^{-n-1} on the exterior. Entries are -sqrt(mn) times
/// the generating-function coefficients; the global sign drops out of BB*.
struct GrunskyTruncation {
    int N = 0;
    Matrix B1, B2, B3, B4;
    std::map<std::string, std::string> provenance;
};

/// Taylor order needed for B1 at size N (coefficient a_{2N+1} enters).
std::size_t required_taylor_order(int N);
/// Laurent order needed for B4 at size N.
std::size_t required_laurent_order(int N);

/// From log((f(z) - f(w))/(z - w)).
Matrix build_B1(const WeldingPair& pair, int N);
/// From log((g(z) - g(w))/(z - w)) in 1/z, 1/w.
Matrix build_B4(const WeldingPair& pair, int N);
/// From log(1 - f(z)/g(w)) in z and 1/w. B3 comes from the same log with the
/// recursion run in the exterior variable, transposed; comparing it with B2^T
/// checks the construction.
std::pair<Matrix, Matrix> build_B2_B3(const WeldingPair& pair, int N);

GrunskyTruncation build_truncation(const WeldingPair& pair, int N);

/// Frobenius norms of B1B1* + B2B2* - I, B3B1* + B4B2*, B1B3* + B2B4*,
/// B3B3* + B4B4* - I on the leading block x block rows/cols (default N/2).
/// The inner sums run over all N columns.
std::array<double, 4> grunsky_identity_residual(const GrunskyTruncation& t, int block = 0);

struct ConvergenceReport {
    std::vector<int> orders;
    std::vector<double> estimates;
    double extrapolated = 0.0;
    double residual_tail = 0.0;
};

/// log det(I - B_n B_n*) for the leading n x n block at each order n.
/// Throws NumericalFailure when I - B_n B_n* is not positive definite.
ConvergenceReport logdet_potential(const Matrix& B, const std::vector<int>& orders);
double logdet_potential(const Matrix& B);

double spectral_norm(const Matrix& B);

enum class Side { Interior, Exterior };

/// K_1..K_4 of the pair at (z, w). K_1, K_4 switch to the diagonal limit
/// -S(h)((z + w)/2)/(6 pi) when |z - w| < 1e-4.
cplx kernel(const WeldingPair& pair, int which, cplx z, cplx w);

/// (K K*)^n kernel on the diagonal, from the truncation: B1 on the disk, B4 on
/// the exterior. Value is v^H (B B^H)^n v with v the conjugated basis vector at z.
double iterated_kernel_diag(const GrunskyTruncation& t, int n, cplx z, Side side = Side::Interior);

struct O1Result {
    double value = 0.0;
    int terms = 0;
    double tail_bound = 0.0;
};

/// sum_{n >= 1} K_{1,n}(z, z)/n, stopped once the geometric tail bound
/// q^{n}/((n + 1)(1 - q)) / (pi (1 - |z|^2)^2) is below tol, q = ||B||^2.
O1Result O1_diag(const GrunskyTruncation& t, cplx z, double tol = 1e-12, Side side = Side::Interior);

struct InversionCheck {
    double s2_pair_B1 = 0.0;
    double s2_inverted_B1 = 0.0;
    double s2_pair_B4 = 0.0;
};

InversionCheck inversion_check(const WeldingPair& pair, int N);

} // namespace wplab
