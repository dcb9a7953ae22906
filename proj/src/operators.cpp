#include "wplab/error.hpp"
#include "wplab/grunsky.hpp"

#include <cmath>
#include <numbers>

namespace wplab {

namespace {

// conj of (e_1(z), ..., e_N(z)) on the disk, of (e*_1(z), ...) outside.
Eigen::VectorXcd basis_vector(int N, cplx z, Side side) {
    Eigen::VectorXcd v(N);
    const cplx step = side == Side::Interior ? z : 1.0 / z;
    cplx p = side == Side::Interior ? cplx{1.0} : step * step;
    for (int m = 1; m <= N; ++m) {
        v(m - 1) = std::conj(std::sqrt(m / std::numbers::pi) * p);
        p *= step;
    }
    return v;
}

const Matrix& side_block(const GrunskyTruncation& t, Side side) {
    return side == Side::Interior ? t.B1 : t.B4;
}

void check_point(cplx z, Side side) {
    if (side == Side::Interior && !(std::abs(z) < 1.0))
        throw InvalidInput("iterated kernel: z must lie in the unit disk");
    if (side == Side::Exterior && !(std::abs(z) > 1.0))
        throw InvalidInput("iterated kernel: z must lie outside the unit disk");
}

} // namespace

double iterated_kernel_diag(const GrunskyTruncation& t, int n, cplx z, Side side) {
    if (n < 1)
        throw InvalidInput("iterated kernel: power must be >= 1");
    check_point(z, side);
    const Matrix& B = side_block(t, side);
    const Eigen::VectorXcd v = basis_vector(t.N, z, side);
    Eigen::VectorXcd x = v;
    for (int i = 0; i < n; ++i)
        x = B * (B.adjoint() * x);
    return v.dot(x).real();
}

O1Result O1_diag(const GrunskyTruncation& t, cplx z, double tol, Side side) {
    check_point(z, side);
    const Matrix& B = side_block(t, side);
    const double s = spectral_norm(B);
    const double q = s * s;
    if (!(q < 1.0))
        throw InvalidInput("O1_diag: operator norm estimate >= 1");
    const double r2 = std::norm(z);
    const double vnorm = 1.0 / (std::numbers::pi * (1.0 - r2) * (1.0 - r2));

    const Eigen::VectorXcd v = basis_vector(t.N, z, side);
    Eigen::VectorXcd x = v;
    O1Result res;
    for (int n = 1; n <= 1000000; ++n) {
        x = B * (B.adjoint() * x);
        res.value += v.dot(x).real() / n;
        res.terms = n;
        res.tail_bound = std::pow(q, n) / ((n + 1) * (1.0 - q)) * vnorm;
        if (res.tail_bound <= tol)
            return res;
    }
    throw NumericalFailure("O1_diag: series did not reach the tolerance", res.tail_bound);
}

InversionCheck inversion_check(const WeldingPair& pair, int N) {
    InversionCheck c;
    c.s2_pair_B1 = logdet_potential(build_B1(pair, N));
    c.s2_inverted_B1 = logdet_potential(build_B1(inverted_pair(pair), N));
    c.s2_pair_B4 = logdet_potential(build_B4(pair, N));
    return c;
}

} // namespace wplab
