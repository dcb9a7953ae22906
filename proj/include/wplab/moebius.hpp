#pragma once

#include <complex>

namespace wplab {

using cplx = std::complex<double>;

// z -> (a z + b) / (c z + d)
class MoebiusTransform {
public:
    MoebiusTransform() = default;
    MoebiusTransform(cplx a, cplx b, cplx c, cplx d) : a_(a), b_(b), c_(c), d_(d) {}

    static MoebiusTransform identity() { return {}; }
    /// Rotation z -> e^{i phi} z, written with determinant one.
    static MoebiusTransform rotation(double phi);
    /// Hyperbolic translation along the real axis by hyperbolic distance `length`.
    static MoebiusTransform real_translation(double length);

    cplx a() const noexcept { return a_; }
    cplx b() const noexcept { return b_; }
    cplx c() const noexcept { return c_; }
    cplx d() const noexcept { return d_; }

    cplx det() const noexcept { return a_ * d_ - b_ * c_; }
    cplx trace() const noexcept { return a_ + d_; }

    cplx operator()(cplx z) const { return (a_ * z + b_) / (c_ * z + d_); }
    cplx derivative(cplx z) const {
        const cplx q = c_ * z + d_;
        return det() / (q * q);
    }
    cplx second_derivative(cplx z) const {
        const cplx q = c_ * z + d_;
        return -2.0 * c_ * det() / (q * q * q);
    }

    /// Scaled so that det = 1 (sign of the square root is the principal one).
    MoebiusTransform normalized() const;
    MoebiusTransform inverse() const { return {d_, -b_, -c_, a_}; }

    /// Largest entrywise difference to `o`, minimised over the sign ambiguity.
    double distance_up_to_sign(const MoebiusTransform& o) const;
    double max_abs_entry() const;

    friend MoebiusTransform operator*(const MoebiusTransform& x, const MoebiusTransform& y) {
        return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
    }

private:
    cplx a_{1.0}, b_{}, c_{}, d_{1.0};
};

} // namespace wplab
