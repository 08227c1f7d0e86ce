#pragma once

#include <vector>

#include "modspace/grid.hpp"
#include "modspace/seqspace.hpp"
#include "modspace/util.hpp"

namespace modspace {

// ---------------------------------------------------------------------------
// Dense short-time Fourier transform
//   V_phi f(x, xi) = F( f * conj(phi(. - x)) )(xi)
//                  = (2 pi)^{-d/2} (f, phi(. - x) e^{i <., xi>})_{L^2}
// tabulated at every grid position x and every dual grid point xi; row-major
// with the position multi-index major.  The grid quadrature makes V an exact
// isometry: (V f, V g) = (f, g) * |phi|_2^2 holds to rounding, which the
// projection and adjoint identities inherit.
// ---------------------------------------------------------------------------

struct DenseSTFT {
    GridSpec grid;
    std::vector<cplx> v;  // grid.total() x grid.total()

    std::size_t points() const { return grid.total(); }
    cplx& at(std::size_t pos, std::size_t freq) { return v[pos * points() + freq]; }
    const cplx& at(std::size_t pos, std::size_t freq) const { return v[pos * points() + freq]; }
};

DenseSTFT stft_dense(const SampledSignal& f, const SampledSignal& phi);

// V_phi^* F(t) = (2 pi)^{-d/2} int F(x, xi) phi(t - x) e^{i <t, xi>} dx dxi
// (grid quadrature).  Adjoint of stft_dense w.r.t. the phase-space and signal
// inner products; V^* V = |phi|^2 Id exactly on the grid.
SampledSignal adjoint_stft(const DenseSTFT& F, const SampledSignal& phi);

// Twisted convolution
//   (F #_V G)(x, xi) = (2 pi)^{-d/2} int F(x-y, xi-eta) G(y, eta)
//                                       e^{-i <y, xi-eta>} dy deta
// with circular wraps; the phase is invariant under both wraps on the grid.
// O(M^2) in the number of phase-space points M; refused above the compiled
// cost cap (M <= 65536, e.g. d=1, L=8, n=16 -> M = 16384).
DenseSTFT twisted_convolve(const DenseSTFT& F, const DenseSTFT& G);

// Gabor projection P_phi = V_phi V_phi^* / |phi|_2^2; fixes exactly the
// phase-space functions of the form V_phi f.
DenseSTFT project(const DenseSTFT& F, const SampledSignal& phi);

// ---------------------------------------------------------------------------
// Gabor coefficients on the lattice Z^d x (pi Z)^d:
//   c(j, iota) = 2^{-d} (f, phi(. - j) e^{i <., iota>})
//              = (pi/2)^{d/2} V_phi f(j, iota),
// stored for j in [-L/2, L/2)^d and iota = pi k, k in [-n, n)^d, the
// Nyquist-admissible frequency window.  Computed per position shift by a
// centered length-2n DFT of the windowed samples on j + [-1, 1)^d; with the
// standard window pair the expansion
//   f(x) = sum_{j,k} c(j, pi k) psi(x - j) e^{i pi <k, x>}
// reconstructs grid signals exactly (to rounding), so analyze/synthesize is a
// genuine round trip, not an approximation.
// ---------------------------------------------------------------------------

struct GaborCoefficients {
    GridSpec grid;
    IndexedCoefficients table;  // j axis: L^d positions; k axis: (2n)^d freqs
    double tail_ratio = 0.0;    // l2 mass of the outermost frequency shell / total

    int positions() const { return grid.d == 1 ? grid.L : grid.L * grid.L; }
    int freqs_per_axis() const { return 2 * grid.n; }
};

GaborCoefficients analyze(const SampledSignal& f, const SampledSignal& phi);
SampledSignal synthesize(const GaborCoefficients& c, const SampledSignal& psi);

}  // namespace modspace
