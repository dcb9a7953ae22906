#include "wplab/fft.hpp"

#include <fftw3.h>

#include <algorithm>

namespace wplab::fft {

namespace {

std::vector<cplx> transform(std::span<const cplx> x, int sign) {
    const int n = static_cast<int>(x.size());
    std::vector<cplx> out(x.size());
    if (n == 0)
        return out;
    // FFTW_ESTIMATE never touches the arrays while planning, so planning on the
    // output buffers is fine.
    std::vector<cplx> in(x.begin(), x.end());
    auto* pin = reinterpret_cast<fftw_complex*>(in.data());
    auto* pout = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan = fftw_plan_dft_1d(n, pin, pout, sign, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    return out;
}

} // namespace

std::vector<cplx> forward(std::span<const cplx> x) { return transform(x, FFTW_FORWARD); }
std::vector<cplx> backward(std::span<const cplx> x) { return transform(x, FFTW_BACKWARD); }

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace wplab::fft
