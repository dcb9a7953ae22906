#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace wplab {

using cplx = std::complex<double>;

enum class SeriesKind { TaylorAtZero, LaurentAtInfinity };

/// Truncated expansion of an analytic map.
///
/// TaylorAtZero:       coeffs[k] multiplies z^k.
/// LaurentAtInfinity:  coeffs[k] multiplies z^(1-k), so g(z) = c0 z + c1 + c2/z + ...
///
/// `order` is the working order: the number of retained coefficients. Anything
/// past it is unknown, not zero, and operations truncate to the smaller order
/// of their inputs.
class ComplexSeries {
public:
    ComplexSeries(SeriesKind kind, std::vector<cplx> coeffs);

    static ComplexSeries taylor(std::vector<cplx> coeffs);
    static ComplexSeries laurent(std::vector<cplx> coeffs);
    static ComplexSeries zero(SeriesKind kind, std::size_t order);
    /// z as a series of the given kind and order.
    static ComplexSeries identity(SeriesKind kind, std::size_t order);

    SeriesKind kind() const noexcept { return kind_; }
    std::size_t order() const noexcept { return coeffs_.size(); }
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }
    cplx operator[](std::size_t k) const { return coeffs_.at(k); }
    /// Coefficient k, or zero past the working order.
    cplx coeff_or_zero(std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : cplx{};
    }

    /// Truncate or zero-pad to `order` coefficients.
    ComplexSeries with_order(std::size_t order) const;

    cplx evaluate(cplx z) const;

private:
    SeriesKind kind_;
    std::vector<cplx> coeffs_;
};

/// Value and first three derivatives at a point.
struct Jet {
    cplx value;
    cplx d1;
    cplx d2;
    cplx d3;
};

Jet evaluate_jet(const ComplexSeries& s, cplx z);

ComplexSeries multiply(const ComplexSeries& a, const ComplexSeries& b);
/// outer(inner(z)); Taylor series only, inner must vanish at 0.
ComplexSeries compose(const ComplexSeries& outer, const ComplexSeries& inner);
ComplexSeries derivative(const ComplexSeries& a);
/// log(a) for a Taylor series with a(0) = 1.
ComplexSeries log_ratio(const ComplexSeries& a);
/// 1/a for a Taylor series with a(0) != 0.
ComplexSeries reciprocal(const ComplexSeries& a);
/// Coefficient-wise complex conjugate, i.e. the series of conj(a(conj z)).
ComplexSeries conjugate(const ComplexSeries& a);

/// Taylor coefficients of h from M samples h(r e^{2 pi i j/M}).
/// Keeps k < M/2 and drops trailing coefficients below `floor_rel` times the
/// largest one. Throws NumericalFailure when the negative-frequency content
/// exceeds `analyticity_tol` relative to the positive part: h is then not
/// analytic inside |z| = r (or is badly under-resolved).
ComplexSeries coeffs_from_samples(std::span<const cplx> samples, double radius,
                                  double floor_rel = 1e-14, double analyticity_tol = 1e-8);
std::vector<cplx> samples_from_coeffs(const ComplexSeries& s, std::size_t M, double radius);

/// Values of a Taylor series at z = r e^{2 pi i j/n}, j = 0..n-1, exact for any
/// order: coefficients are folded modulo n before one backward DFT.
std::vector<cplx> evaluate_on_circle(std::span<const cplx> taylor_coeffs, double radius,
                                     std::size_t n);

} // namespace wplab
