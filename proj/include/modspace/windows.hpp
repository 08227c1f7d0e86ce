#pragma once

#include <vector>

#include "modspace/grid.hpp"
#include "modspace/util.hpp"

namespace modspace {

// ---------------------------------------------------------------------------
// Compactly supported Gevrey windows.
//
// The transition profile is r(t) = h(t)/(h(t)+h(1-t)), h(t) = exp(-t^{-1/(s-1)})
// for t > 0, clamped outside [0,1]; r is Gevrey of order s (sigma > 1) and
// r(t) + r(1-t) = 1 exactly.  The window pair per axis:
//   phi(x) = r(2(3/4 - |x|)) : supp [-3/4, 3/4], == 1 on [-1/4, 1/4],
//                              sum_j phi(x - j) == 1 (integer shifts)
//   psi(x) = r(4(1 - |x|))   : supp [-1, 1],     == 1 on [-3/4, 3/4]
// d-dimensional windows are tensor products.
// ---------------------------------------------------------------------------

struct Ramp {
    double sigma;
    double operator()(double t) const { return gevrey_ramp(t, sigma); }
};

Ramp make_ramp(double sigma);

// closed-form axis profiles (used for on-grid sampling and local lookups)
double phi_profile(double x, double sigma);
double psi_profile(double x, double sigma);

struct WindowPair {
    GridSpec grid;
    double sigma = 2.0;
    SampledSignal phi;  // analysis window
    SampledSignal psi;  // synthesis window
};

// pre: n >= 8 so the transition zones are resolved; L >= 2 so supp psi fits
WindowPair make_window_pair(const GridSpec& g, double sigma);

// max over grid points of |sum_j phi(x - j) - 1| (exact partition up to fp)
double partition_unity_error(const WindowPair& wp);

// ---------------------------------------------------------------------------
// Gevrey seminorm by spectral differentiation:
//   value = max_{|alpha| <= max_order} sup |d^alpha f| / (h^{|alpha|} (alpha!)^sigma).
// Spectral derivatives of barely-resolved high orders drown in amplified
// rounding noise; per-order sups are reported together with the first order
// whose magnitude falls under a conservative noise estimate instead of
// silently returning garbage.
// ---------------------------------------------------------------------------

struct GevreyReport {
    double value = 0.0;
    std::vector<double> order_sup;  // max_{|alpha| = k} sup |d^alpha f|, k = 0..max_order
    int suspect_order = -1;         // -1: all orders trustworthy
};

GevreyReport gevrey_seminorm(const SampledSignal& f, double h, double sigma, int max_order);

// per-multi-index spectral derivative (shared with the multiplier envelopes)
SampledSignal spectral_derivative(const SampledSignal& f, const std::vector<int>& alpha);

// ---------------------------------------------------------------------------
// Least-squares fit of log |f^(xi)| against -r |xi|^{1/sigma} + const over the
// band nyquist/8 <= |xi| <= nyquist/2.  Positive fitted r certifies the
// subexponential Fourier decay a Gevrey-sigma function must have; smooth but
// non-Gevrey decays fit r near 0.
// ---------------------------------------------------------------------------

struct DecayFit {
    double rate = 0.0;       // fitted r
    double intercept = 0.0;  // fitted log C
    int points = 0;          // samples used
};

DecayFit fourier_decay_fit(const SampledSignal& f, double sigma);

}  // namespace modspace
