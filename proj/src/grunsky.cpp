#include "wplab/error.hpp"
#include "wplab/grunsky.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

namespace wplab {

namespace {

void check_N(int N) {
    if (N < 1)
        throw InvalidInput("grunsky: truncation order must be >= 1");
}

// B[m-1, n-1] = -sqrt(mn) l(m, n), m, n = 1..N.
Matrix scaled_block(const Matrix& l, int N) {
    Matrix B(N, N);
    for (int m = 1; m <= N; ++m)
        for (int n = 1; n <= N; ++n)
            B(m - 1, n - 1) = -std::sqrt(static_cast<double>(m) * n) * l(m, n);
    return B;
}

void check_domain(cplx z, bool interior, const char* what) {
    if (interior ? !(std::abs(z) < 1.0) : !(std::abs(z) > 1.0))
        throw InvalidInput(std::string("kernel: ") + what +
                           (interior ? " must lie in the unit disk" : " must lie outside the unit disk"));
}

} // namespace

std::size_t required_taylor_order(int N) { return 2 * static_cast<std::size_t>(N) + 2; }
std::size_t required_laurent_order(int N) { return 2 * static_cast<std::size_t>(N) + 1; }

Matrix build_B1(const WeldingPair& pair, int N) {
    check_N(N);
    const auto& f = pair.f;
    if (f.order() < required_taylor_order(N))
        throw InvalidInput("build_B1: Taylor order " + std::to_string(f.order()) + " < required " +
                           std::to_string(required_taylor_order(N)));
    // (f(z) - f(w))/(z - w) = sum_{i,j} a_{i+j+1} z^i w^j.
    const cplx a1 = f[1];
    Matrix q(N + 1, N + 1);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j)
            q(i, j) = f[i + j + 1] / a1;
    return scaled_block(bivariate_log(q), N);
}

Matrix build_B4(const WeldingPair& pair, int N) {
    check_N(N);
    const auto& g = pair.g;
    if (g.order() < required_laurent_order(N))
        throw InvalidInput("build_B4: Laurent order " + std::to_string(g.order()) + " < required " +
                           std::to_string(required_laurent_order(N)));
    // In u = 1/z, v = 1/w: (g(z) - g(w))/(z - w) = L_0 - sum_{p,r >= 1} L_{p+r} u^p v^r.
    const cplx L0 = g[0];
    Matrix q = Matrix::Zero(N + 1, N + 1);
    q(0, 0) = 1.0;
    for (int p = 1; p <= N; ++p)
        for (int r = 1; r <= N; ++r)
            q(p, r) = -g[p + r] / L0;
    return scaled_block(bivariate_log(q), N);
}

std::pair<Matrix, Matrix> build_B2_B3(const WeldingPair& pair, int N) {
    check_N(N);
    const auto& f = pair.f;
    const auto& g = pair.g;
    if (f.order() < static_cast<std::size_t>(N) + 1 || g.order() < static_cast<std::size_t>(N))
        throw InvalidInput("build_B2_B3: series orders too small for N = " + std::to_string(N));
    // 1/g(w) = u R(u) with R = 1/(L_0 + L_1 u + ...); f(z)/g(w) = sum a_m s_n z^m u^n.
    const auto R = reciprocal(ComplexSeries::taylor(
        {g.coeffs().begin(), g.coeffs().begin() + static_cast<std::ptrdiff_t>(N)}));
    Matrix q = Matrix::Zero(N + 1, N + 1);
    q(0, 0) = 1.0;
    for (int m = 1; m <= N; ++m)
        for (int n = 1; n <= N; ++n)
            q(m, n) = -f[m] * R[n - 1];
    Matrix B2 = scaled_block(bivariate_log(q, true), N);
    Matrix B3 = scaled_block(bivariate_log(q, false), N).transpose();
    return {std::move(B2), std::move(B3)};
}

GrunskyTruncation build_truncation(const WeldingPair& pair, int N) {
    GrunskyTruncation t;
    t.N = N;
    t.B1 = build_B1(pair, N);
    t.B4 = build_B4(pair, N);
    std::tie(t.B2, t.B3) = build_B2_B3(pair, N);
    t.provenance["pair"] = pair.family_tag;
    t.provenance["B1"] = "log((f(z)-f(w))/(z-w)) series";
    t.provenance["B4"] = "log((g(z)-g(w))/(z-w)) series in 1/z, 1/w";
    t.provenance["B2"] = "log(1-f(z)/g(w)) series, recursion in z";
    t.provenance["B3"] = "log(1-f(z)/g(w)) series, recursion in 1/w, transposed";
    return t;
}

std::array<double, 4> grunsky_identity_residual(const GrunskyTruncation& t, int block) {
    const int h = block > 0 ? std::min(block, t.N) : std::max(t.N / 2, 1);
    const Matrix b1 = t.B1.topRows(h), b2 = t.B2.topRows(h), b3 = t.B3.topRows(h),
                 b4 = t.B4.topRows(h);
    const Matrix I = Matrix::Identity(h, h);
    return {(b1 * b1.adjoint() + b2 * b2.adjoint() - I).norm(),
            (b3 * b1.adjoint() + b4 * b2.adjoint()).norm(),
            (b1 * b3.adjoint() + b2 * b4.adjoint()).norm(),
            (b3 * b3.adjoint() + b4 * b4.adjoint() - I).norm()};
}

double logdet_potential(const Matrix& B) {
    const Eigen::Index n = B.rows();
    if (B.cols() != n)
        throw InvalidInput("logdet_potential: square matrix required");
    if (n == 0)
        return 0.0;
    const Matrix A = Matrix::Identity(n, n) - B * B.adjoint();
    Eigen::LLT<Matrix> llt(A);
    if (llt.info() != Eigen::Success)
        throw NumericalFailure("logdet_potential: I - BB* is not positive definite at order " +
                               std::to_string(n));
    Eigen::PartialPivLU<Matrix> lu(A);
    cplx s{};
    for (Eigen::Index i = 0; i < n; ++i)
        s += std::log(lu.matrixLU()(i, i));
    double im = s.imag();
    if (lu.permutationP().determinant() < 0)
        im += std::numbers::pi;
    im = std::remainder(im, 2.0 * std::numbers::pi);
    if (std::abs(im) > 1e-12)
        throw NumericalFailure("logdet_potential: determinant is not real positive", std::abs(im));
    return s.real();
}

ConvergenceReport logdet_potential(const Matrix& B, const std::vector<int>& orders) {
    if (orders.empty())
        throw InvalidInput("logdet_potential: no orders given");
    ConvergenceReport r;
    int prev = 0;
    for (int n : orders) {
        if (n <= prev || n > B.rows())
            throw InvalidInput("logdet_potential: orders must increase and fit the matrix");
        prev = n;
        r.orders.push_back(n);
        r.estimates.push_back(logdet_potential(B.topLeftCorner(n, n)));
    }
    r.extrapolated = r.estimates.back();
    r.residual_tail =
        r.estimates.size() > 1 ? std::abs(r.estimates.back() - r.estimates[r.estimates.size() - 2]) : 0.0;
    return r;
}

double spectral_norm(const Matrix& B) {
    if (B.size() == 0)
        return 0.0;
    Eigen::BDCSVD<Matrix> svd(B);
    return svd.singularValues()(0);
}

cplx kernel(const WeldingPair& pair, int which, cplx z, cplx w) {
    const double pi = std::numbers::pi;
    switch (which) {
    case 1:
    case 4: {
        const bool in = which == 1;
        check_domain(z, in, "z");
        check_domain(w, in, "w");
        const auto& h = in ? pair.f : pair.g;
        if (std::abs(z - w) < 1e-4)
            return -schwarzian(h, 0.5 * (z + w)) / (6.0 * pi);
        const Jet a = evaluate_jet(h, z), b = evaluate_jet(h, w);
        const cplx dz = z - w, dh = a.value - b.value;
        return (1.0 / (dz * dz) - a.d1 * b.d1 / (dh * dh)) / pi;
    }
    case 2:
    case 3: {
        const bool first_in = which == 2;
        check_domain(z, first_in, "z");
        check_domain(w, !first_in, "w");
        const Jet a = evaluate_jet(first_in ? pair.f : pair.g, z);
        const Jet b = evaluate_jet(first_in ? pair.g : pair.f, w);
        const cplx d = a.value - b.value;
        return a.d1 * b.d1 / (d * d) / pi;
    }
    default:
        throw InvalidInput("kernel: which must be 1..4");
    }
}

} // namespace wplab
