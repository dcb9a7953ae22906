#pragma once

#include <complex>
#include <span>
#include <vector>

namespace wplab::fft {

using cplx = std::complex<double>;

// Unnormalized DFT. Forward: X_k = sum_j x_j e^{-2 pi i jk/M}; backward uses +i.
std::vector<cplx> forward(std::span<const cplx> x);
std::vector<cplx> backward(std::span<const cplx> x);

bool is_power_of_two(std::size_t n);

} // namespace wplab::fft
