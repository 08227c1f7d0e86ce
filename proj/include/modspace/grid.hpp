#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modspace/util.hpp"

namespace modspace {

// ---------------------------------------------------------------------------
// Periodic sampling grid.
//
// The fundamental domain is [-L/2, L/2)^d sampled with step 1/n, so the
// integer lattice Z^d lies on grid points (L even) and one axis carries
// N = L*n samples.  The dual grid covers [-pi*n, pi*n)^d with step 2*pi/L;
// the frequency lattice pi*Z^d lies on dual grid points, again because L is
// even.  All transforms below use the unitary convention
//     (F f)(xi) = (2 pi)^{-d/2} integral f(x) e^{-i<x,xi>} dx .
// ---------------------------------------------------------------------------

struct GridSpec {
    int d = 1;  // ambient dimension, 1 or 2
    int L = 2;  // even period per axis
    int n = 4;  // samples per unit length, power of two

    int axis() const { return L * n; }
    std::size_t total() const {
        std::size_t a = static_cast<std::size_t>(axis());
        return d == 1 ? a : a * a;
    }
    double dx() const { return 1.0 / n; }
    double dxi() const { return 2.0 * pi / L; }
    double nyquist() const { return pi * n; }
    double cell_x() const { return d == 1 ? dx() : dx() * dx(); }
    double cell_xi() const { return d == 1 ? dxi() : dxi() * dxi(); }

    // coordinate of sample index (0 <= i < axis) along one axis
    double x(int i) const { return -0.5 * L + i * dx(); }
    double xi(int k) const { return -nyquist() + k * dxi(); }

    // axis index of the grid point at integer position j in [-L/2, L/2)
    int index_of_int(int j) const { return (j + L / 2) * n; }
    // axis index of the dual grid point pi*k; pi*k = -pi*n + idx*2*pi/L
    int index_of_pik(int k) const { return (k + n) * L / 2; }

    bool operator==(const GridSpec&) const = default;
};

GridSpec make_grid(int d, int L, int n);

// Frequency-side view of the same index set.
struct FreqGrid {
    GridSpec g;
    double coord(int k) const { return g.xi(k); }
    int axis() const { return g.axis(); }
};

// d <= 2 array of complex samples in row-major natural order (coordinates
// ascending per axis).  Whether the values live on the position or the
// frequency side is contextual; the geometry is identical.
struct SampledSignal {
    GridSpec grid;
    std::vector<cplx> v;

    cplx& at(int i) { return v[static_cast<std::size_t>(i)]; }
    const cplx& at(int i) const { return v[static_cast<std::size_t>(i)]; }
    cplx& at(int i, int j) { return v[static_cast<std::size_t>(i) * grid.axis() + j]; }
    const cplx& at(int i, int j) const {
        return v[static_cast<std::size_t>(i) * grid.axis() + j];
    }
};

SampledSignal zero_signal(const GridSpec& g);

// ---------------------------------------------------------------------------
// Signal catalog.  Every descriptor evaluates to an exactly L-periodic signal;
// descriptors whose periodization or spectral truncation would exceed a 1e-12
// relative error are rejected rather than silently aliased.
// ---------------------------------------------------------------------------

struct SignalSpec {
    enum class Kind { zero, constant, gaussian, gevrey_bump, random_bandlimited };

    Kind kind = Kind::zero;
    cplx amplitude{1.0, 0.0};
    std::vector<double> center;      // gaussian / gevrey_bump
    std::vector<double> modulation;  // extra factor e^{i<mu,x>}
    double width = 1.0;              // gaussian: e^{-|x-c|^2 / (2 width^2)}
    double radius = 1.0;             // gevrey_bump: support radius per axis
    double sigma = 2.0;              // gevrey_bump regularity
    std::uint64_t seed = 1;          // random_bandlimited
    double xi_max = 10.0;            // random_bandlimited band edge (physical)

    static SignalSpec zero() { return {}; }
    static SignalSpec constant(cplx value);
    static SignalSpec gaussian(std::vector<double> center, double width,
                               std::vector<double> modulation = {}, cplx amplitude = 1.0);
    static SignalSpec bump(std::vector<double> center, double radius, double sigma,
                           std::vector<double> modulation = {}, cplx amplitude = 1.0);
    static SignalSpec bandlimited_noise(std::uint64_t seed, double xi_max);
};

SampledSignal sample(const GridSpec& g, const SignalSpec& spec);

// ---------------------------------------------------------------------------
// Transforms and inner products.
// ---------------------------------------------------------------------------

enum class FourierDir { forward, inverse };

// Unitary transform between the grid and its dual; forward * inverse is the
// identity to rounding because step and dual step satisfy dx*dxi*N = 2*pi.
SampledSignal fourier(const SampledSignal& f, FourierDir dir);

// Riemann approximation of integral f * conj(g), always with the position
// cell measure.  fourier() satisfies the exact grid Parseval identity against
// the dual measure: l2_inner(Ff, Fg) * cell_xi / cell_x == l2_inner(f, g).
cplx l2_inner(const SampledSignal& f, const SampledSignal& g);
double l2_norm(const SampledSignal& f);

// Pointwise helpers (grids must match).
SampledSignal pointwise_mul(const SampledSignal& f, const SampledSignal& g);
SampledSignal conjugate(const SampledSignal& f);
void scale(SampledSignal& f, cplx c);
void accumulate(SampledSignal& into, const SampledSignal& from, cplx c = 1.0);

// Circular translate by whole grid steps (positive shift moves content toward
// larger coordinates), and modulation by an on-grid frequency index vector:
// out(x) = f(x) * e^{i <xi_k, x>} with xi_k = k * dxi per axis.
SampledSignal translate(const SampledSignal& f, const std::vector<int>& steps);
SampledSignal modulate(const SampledSignal& f, const std::vector<int>& freq_index);

double max_abs(const SampledSignal& f);
double rel_l2_error(const SampledSignal& got, const SampledSignal& want);

}  // namespace modspace
