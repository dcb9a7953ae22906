#include "wplab/series.hpp"

#include "wplab/error.hpp"
#include "wplab/fft.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wplab {

namespace {

void require_taylor(const ComplexSeries& s, const char* op) {
    if (s.kind() != SeriesKind::TaylorAtZero)
        throw InvalidInput(std::string(op) + ": Taylor series required");
}

// Taylor-series division n/d to `order` terms.
std::vector<cplx> divide(std::span<const cplx> n, std::span<const cplx> d, std::size_t order) {
    std::vector<cplx> out(order);
    for (std::size_t k = 0; k < order; ++k) {
        cplx s = k < n.size() ? n[k] : cplx{};
        const std::size_t top = std::min(k, d.size() - 1);
        for (std::size_t j = 1; j <= top; ++j)
            s -= d[j] * out[k - j];
        out[k] = s / d[0];
    }
    return out;
}

} // namespace

ComplexSeries::ComplexSeries(SeriesKind kind, std::vector<cplx> coeffs)
    : kind_(kind), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw InvalidInput("ComplexSeries: order must be >= 1");
    for (const cplx& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InvalidInput("ComplexSeries: non-finite coefficient");
}

ComplexSeries ComplexSeries::taylor(std::vector<cplx> coeffs) {
    return {SeriesKind::TaylorAtZero, std::move(coeffs)};
}

ComplexSeries ComplexSeries::laurent(std::vector<cplx> coeffs) {
    return {SeriesKind::LaurentAtInfinity, std::move(coeffs)};
}

ComplexSeries ComplexSeries::zero(SeriesKind kind, std::size_t order) {
    return {kind, std::vector<cplx>(order)};
}

ComplexSeries ComplexSeries::identity(SeriesKind kind, std::size_t order) {
    std::vector<cplx> c(order);
    const std::size_t slot = kind == SeriesKind::TaylorAtZero ? 1 : 0;
    if (slot < order)
        c[slot] = 1.0;
    return {kind, std::move(c)};
}

ComplexSeries ComplexSeries::with_order(std::size_t order) const {
    std::vector<cplx> c(order);
    std::copy_n(coeffs_.begin(), std::min(order, coeffs_.size()), c.begin());
    return {kind_, std::move(c)};
}

cplx ComplexSeries::evaluate(cplx z) const {
    if (kind_ == SeriesKind::TaylorAtZero) {
        cplx acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * z + *it;
        return acc;
    }
    const cplx u = 1.0 / z;
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * u + *it;
    return acc * z;
}

Jet evaluate_jet(const ComplexSeries& s, cplx z) {
    const auto c = s.coeffs();
    Jet j{};
    if (s.kind() == SeriesKind::TaylorAtZero) {
        // Horner with derivative accumulation.
        for (std::size_t k = c.size(); k-- > 0;) {
            j.d3 = j.d3 * z + 3.0 * j.d2;
            j.d2 = j.d2 * z + 2.0 * j.d1;
            j.d1 = j.d1 * z + j.value;
            j.value = j.value * z + c[k];
        }
        return j;
    }
    // g(z) = sum c_k z^(1-k); derivatives in powers of u = 1/z.
    const cplx u = 1.0 / z;
    cplx v{}, d1{}, d2{}, d3{};
    for (std::size_t k = c.size(); k-- > 0;) {
        const double e = 1.0 - static_cast<double>(k);
        v = v * u + c[k];
        d1 = d1 * u + e * c[k];
        d2 = d2 * u + e * (e - 1.0) * c[k];
        d3 = d3 * u + e * (e - 1.0) * (e - 2.0) * c[k];
    }
    j.value = v * z;
    j.d1 = d1;
    j.d2 = d2 * u;
    j.d3 = d3 * u * u;
    return j;
}

ComplexSeries multiply(const ComplexSeries& a, const ComplexSeries& b) {
    if (a.kind() != b.kind())
        throw InvalidInput("multiply: series kinds differ");
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<cplx> out(order);
    if (a.kind() == SeriesKind::TaylorAtZero) {
        for (std::size_t i = 0; i < order; ++i)
            for (std::size_t j = 0; i + j < order; ++j)
                out[i + j] += a[i] * b[j];
        return ComplexSeries::taylor(std::move(out));
    }
    // z^(1-i) z^(1-j) = z^(1-(i+j-1)); the i = j = 0 term would be z^2.
    if (a[0] != cplx{} && b[0] != cplx{})
        throw InvalidInput("multiply: Laurent product has a z^2 term");
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) {
            if (i + j == 0)
                continue;
            const std::size_t m = i + j - 1;
            if (m < order)
                out[m] += a[i] * b[j];
        }
    return ComplexSeries::laurent(std::move(out));
}

ComplexSeries compose(const ComplexSeries& outer, const ComplexSeries& inner) {
    require_taylor(outer, "compose");
    require_taylor(inner, "compose");
    if (inner[0] != cplx{})
        throw InvalidInput("compose: inner series has a nonzero constant term");
    const std::size_t order = std::min(outer.order(), inner.order());
    // Horner in series arithmetic: outer(inner) = c0 + inner*(c1 + inner*(...)).
    std::vector<cplx> acc(order);
    const auto in = inner.coeffs();
    for (std::size_t k = order; k-- > 0;) {
        std::vector<cplx> next(order);
        for (std::size_t i = 0; i < order; ++i) {
            if (acc[i] == cplx{})
                continue;
            for (std::size_t j = 1; i + j < order; ++j)
                next[i + j] += acc[i] * in[j];
        }
        next[0] += outer[k];
        acc = std::move(next);
    }
    return ComplexSeries::taylor(std::move(acc));
}

ComplexSeries derivative(const ComplexSeries& a) {
    if (a.order() < 2)
        return ComplexSeries::zero(a.kind(), 1);
    if (a.kind() == SeriesKind::TaylorAtZero) {
        std::vector<cplx> out(a.order() - 1);
        for (std::size_t k = 1; k < a.order(); ++k)
            out[k - 1] = static_cast<double>(k) * a[k];
        return ComplexSeries::taylor(std::move(out));
    }
    // d/dz z^(1-k) = (1-k) z^(-k), which sits at index k+1.
    std::vector<cplx> out(a.order());
    for (std::size_t k = 0; k + 1 < a.order(); ++k)
        out[k + 1] = (1.0 - static_cast<double>(k)) * a[k];
    return ComplexSeries::laurent(std::move(out));
}

ComplexSeries log_ratio(const ComplexSeries& a) {
    require_taylor(a, "log_ratio");
    if (std::abs(a[0] - 1.0) > 1e-14)
        throw InvalidInput("log_ratio: constant term must be 1");
    // (log a)' = a'/a, integrated termwise.
    const std::size_t n = a.order();
    std::vector<cplx> da(n);
    for (std::size_t k = 1; k < n; ++k)
        da[k - 1] = static_cast<double>(k) * a[k];
    const auto q = divide(da, a.coeffs(), n);
    std::vector<cplx> out(n);
    for (std::size_t k = 1; k < n; ++k)
        out[k] = q[k - 1] / static_cast<double>(k);
    return ComplexSeries::taylor(std::move(out));
}

ComplexSeries reciprocal(const ComplexSeries& a) {
    require_taylor(a, "reciprocal");
    if (a[0] == cplx{})
        throw InvalidInput("reciprocal: constant term vanishes");
    const cplx one[] = {1.0};
    return ComplexSeries::taylor(divide(one, a.coeffs(), a.order()));
}

ComplexSeries conjugate(const ComplexSeries& a) {
    std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c)
        x = std::conj(x);
    return {a.kind(), std::move(c)};
}

ComplexSeries coeffs_from_samples(std::span<const cplx> samples, double radius, double floor_rel,
                                  double analyticity_tol) {
    const std::size_t M = samples.size();
    if (!fft::is_power_of_two(M) || M < 2)
        throw InvalidInput("coeffs_from_samples: sample count must be a power of two");
    if (!(radius > 0.0))
        throw InvalidInput("coeffs_from_samples: radius must be positive");
    auto X = fft::forward(samples);
    double pos_max = 0.0, neg_max = 0.0;
    for (std::size_t k = 0; k < M; ++k) {
        X[k] /= static_cast<double>(M);
        double& slot = k < M / 2 ? pos_max : neg_max;
        slot = std::max(slot, std::abs(X[k]));
    }
    if (neg_max > analyticity_tol * std::max(pos_max, 1e-300))
        throw NumericalFailure("coeffs_from_samples: negative-frequency content; the circle "
                               "|z| = r leaves the domain of analyticity",
                               neg_max / pos_max);
    // The floor acts on the sampled magnitudes r^k |c_k|, where the rounding
    // noise lives; dividing by r^k afterwards would amplify it.
    const std::size_t keep = std::max<std::size_t>(M / 2, 1);
    std::size_t last = keep;
    while (last > 1 && std::abs(X[last - 1]) < floor_rel * pos_max)
        --last;
    std::vector<cplx> c(last);
    for (std::size_t k = 0; k < last; ++k)
        c[k] = std::abs(X[k]) < floor_rel * pos_max
                   ? cplx{}
                   : X[k] * std::pow(radius, -static_cast<double>(k));
    return ComplexSeries::taylor(std::move(c));
}

std::vector<cplx> evaluate_on_circle(std::span<const cplx> coeffs, double radius, std::size_t n) {
    std::vector<cplx> fold(n);
    double rk = 1.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        fold[k % n] += coeffs[k] * rk;
        rk *= radius;
        if (rk == 0.0)
            break;
    }
    return fft::backward(fold);
}

std::vector<cplx> samples_from_coeffs(const ComplexSeries& s, std::size_t M, double radius) {
    if (s.kind() != SeriesKind::TaylorAtZero)
        throw InvalidInput("samples_from_coeffs: Taylor series required");
    if (!fft::is_power_of_two(M))
        throw InvalidInput("samples_from_coeffs: sample count must be a power of two");
    return evaluate_on_circle(s.coeffs(), radius, M);
}

} // namespace wplab
