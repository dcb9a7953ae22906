#include "wplab/error.hpp"
#include "wplab/grunsky.hpp"

namespace wplab {

namespace {

// out = s / d as power series in y, truncated to s.size(); d(0) = 1.
Eigen::VectorXcd divide_unit(const Eigen::VectorXcd& s, const Eigen::VectorXcd& d) {
    const Eigen::Index n = s.size();
    Eigen::VectorXcd out(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        cplx acc = s(j);
        for (Eigen::Index k = 1; k <= j; ++k)
            acc -= d(k) * out(j - k);
        out(j) = acc;
    }
    return out;
}

Matrix log_rows(const Matrix& q) {
    const Eigen::Index R = q.rows(), C = q.cols();
    Matrix l = Matrix::Zero(R, C);
    const Eigen::VectorXcd q0 = q.row(0).transpose();

    // Row 0 is the univariate log of q(0, y), from y l' = y q'/q.
    {
        Eigen::VectorXcd s(C);
        for (Eigen::Index j = 0; j < C; ++j)
            s(j) = static_cast<double>(j) * q0(j);
        const auto r = divide_unit(s, q0);
        for (Eigen::Index j = 1; j < C; ++j)
            l(0, j) = r(j) / static_cast<double>(j);
    }
    // x d/dx of q = exp(l): i q_i = sum_{p=0}^{i-1} q_p * (i - p) l_{i-p}, with
    // * the y-convolution. The p = 0 term is q_0 * i l_i, hence one division.
    Eigen::VectorXcd s(C);
    for (Eigen::Index i = 1; i < R; ++i) {
        for (Eigen::Index j = 0; j < C; ++j)
            s(j) = static_cast<double>(i) * q(i, j);
        for (Eigen::Index p = 1; p < i; ++p) {
            const double w = static_cast<double>(i - p);
            for (Eigen::Index j = 0; j < C; ++j) {
                cplx acc{};
                for (Eigen::Index r = 0; r <= j; ++r)
                    acc += q(p, r) * l(i - p, j - r);
                s(j) -= w * acc;
            }
        }
        const auto row = divide_unit(s, q0);
        for (Eigen::Index j = 0; j < C; ++j)
            l(i, j) = row(j) / static_cast<double>(i);
    }
    return l;
}

} // namespace

Matrix bivariate_log(const Matrix& q, bool x_first) {
    if (q.rows() < 1 || q.cols() < 1)
        throw InvalidInput("bivariate_log: empty coefficient matrix");
    if (std::abs(q(0, 0) - 1.0) > 1e-14)
        throw InvalidInput("bivariate_log: constant term must be 1");
    if (x_first)
        return log_rows(q);
    return log_rows(q.transpose()).transpose();
}

} // namespace wplab
