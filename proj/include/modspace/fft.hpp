#pragma once

#include <vector>

#include "modspace/util.hpp"

namespace modspace {

// Centered DFT:  out[k] = sum_m in[m] * exp(i * sign * 2*pi * <m,k> / N)
// where every index runs over the centered window [-N/2, N/2) per axis and
// the vectors are stored in natural (ascending-coordinate, row-major) order.
// sign = -1 is the analysis direction (kernel e^{-2 pi i <m,k> / N}).
// In-place, no scaling.
//
// Backed by FFTW with a process-wide mutex around planning; execution is
// thread-safe (new-array interface, FFTW_UNALIGNED plans).
void centered_dft(std::vector<cplx>& data, const std::vector<int>& dims, int sign);

// Plain (index-zero-based) DFT, same storage, used where no centering is
// wanted: out[k] = sum_m in[m] e^{i sign 2 pi m k / N}.
void raw_dft(std::vector<cplx>& data, const std::vector<int>& dims, int sign);

}  // namespace modspace
