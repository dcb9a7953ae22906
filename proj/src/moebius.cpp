#include "wplab/moebius.hpp"

#include <algorithm>
#include <cmath>

namespace wplab {

MoebiusTransform MoebiusTransform::rotation(double phi) {
    const cplx h = std::polar(1.0, phi / 2.0);
    return {h, 0.0, 0.0, std::conj(h)};
}

MoebiusTransform MoebiusTransform::real_translation(double length) {
    const double ch = std::cosh(length / 2.0), sh = std::sinh(length / 2.0);
    return {ch, sh, sh, ch};
}

MoebiusTransform MoebiusTransform::normalized() const {
    const cplx s = std::sqrt(det());
    return {a_ / s, b_ / s, c_ / s, d_ / s};
}

double MoebiusTransform::distance_up_to_sign(const MoebiusTransform& o) const {
    auto dist = [&](double sgn) {
        return std::max({std::abs(a_ - sgn * o.a_), std::abs(b_ - sgn * o.b_),
                         std::abs(c_ - sgn * o.c_), std::abs(d_ - sgn * o.d_)});
    };
    return std::min(dist(1.0), dist(-1.0));
}

double MoebiusTransform::max_abs_entry() const {
    return std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
}

} // namespace wplab
