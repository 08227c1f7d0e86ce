// Multiplication and convolution of grid signals through their STFTs.
//
// Both operations share one recipe: take dense STFTs of the factors, convolve
// them fiberwise (along frequency for products, along position for
// convolutions), and pull the result back with the adjoint STFT of a window
// phi_0 whose pairing against the factor windows is pinned to a fixed
// constant.  On the grid the recipe is exact: the frequency-fiber chain
// reproduces the pointwise product to rounding, and the position-fiber chain
// reproduces the normalized convolution F^{-1}(fhat_1 ... fhat_N), where F is
// the unitary grid Fourier transform.  The oracle checks in the tests lean on
// this exactness.
//
// Conventions.  The fiber convolutions are plain quadrature-weighted circular
// convolutions (no 2 pi factors).  The pairing targets are then forced:
//   multiply:  (phi_1 ... phi_N, phi_0)_{L^2} = (2 pi)^{-(N-1) d / 2}
//   convolve:  (phi_1 * ... * phi_N, phi_0)_{L^2} = 1   (plain convolution)
// and the extracted convolution carries the normalization
// (2 pi)^{-(N-1) d / 2} relative to the plain one, i.e. the Fourier transform
// of the output is exactly the product of the factor transforms.

#pragma once

#include <vector>

#include "modspace/gabor.hpp"
#include "modspace/grid.hpp"
#include "modspace/modnorm.hpp"
#include "modspace/seqspace.hpp"
#include "modspace/util.hpp"
#include "modspace/weights.hpp"

namespace modspace {

enum class ProductKind { multiply, convolve };

struct ProductRequest {
    ProductKind kind = ProductKind::multiply;
    std::vector<SampledSignal> phi;  // factor windows phi_1 .. phi_N
    SampledSignal phi0;              // extraction window, rescaled in-place
    double pairing_target = 1.0;     // value the grid pairing is pinned to
    cplx pairing{0.0, 0.0};          // measured pairing after rescaling

    int factors() const { return static_cast<int>(phi.size()); }
};

// Gaussian window tuple for N factors; widths[j] is the standard deviation of
// phi_{j+1} (defaults to 1 + j/4), phi_0 starts as a unit-width Gaussian and
// is rescaled to meet the pairing target.  Grid capped at L <= 16, n <= 32,
// and 512 total points to keep the cubic fiber cost desk-scale.
ProductRequest make_product_windows(const GridSpec& g, ProductKind kind, int n_factors,
                                    const std::vector<double>& widths = {});

// f_1 ... f_N via frequency-fiber convolutions and adjoint extraction.
SampledSignal stft_multiply(const std::vector<SampledSignal>& factors, const ProductRequest& req);

// f_1 * ... * f_N (normalized convolution) via position-fiber convolutions.
SampledSignal stft_convolve(const std::vector<SampledSignal>& factors, const ProductRequest& req);

// Exponent regimes for the four mapping theorems on products: the
// Hoelder-type leg rides the unconvolved axis and the Young-type leg, with
// its R_{r,N} correction, rides the convolved one.
//   multiply on M:  1/p0 <= sum 1/p_j,              1/q0 <= sum 1/q_j - R_{p0,N}(q)
//   multiply on W:  1/p0 <= sum 1/p_j,              1/q0 <= sum 1/q_j - R_N(q)
//   convolve on M:  1/p0 <= sum 1/p_j - R_N(p),     1/q0 <= sum 1/q_j
//   convolve on W:  1/p0 <= sum 1/p_j - R_{q0,N}(p), 1/q0 <= sum 1/q_j
bool product_exponents_admissible(ProductKind kind, Flavor flavor, const Exponent& p0,
                                  const Exponent& q0, const std::vector<Exponent>& ps,
                                  const std::vector<Exponent>& qs);

// Certified constant for the weight compatibility condition, sampled over the
// grid's physical ranges:
//   multiply:  omega_0(x, xi_1 + ... + xi_N) <= C prod omega_j(x, xi_j)
//   convolve:  omega_0(x_1 + ... + x_N, xi) <= C prod omega_j(x_j, xi)
// Returns the sampled sup of lhs / prod; all weights must have dimension 2d.
double product_weight_constant(ProductKind kind, const GridSpec& g, const Weight& w0,
                               const std::vector<Weight>& ws);

struct ProductNormReport {
    bool admissible = false;
    double lhs = 0.0;            // mod norm of the product / convolution
    double rhs_product = 0.0;    // product of factor norms times weight constant
    double weight_constant = 1.0;
    double ratio = 0.0;          // lhs / rhs_product
};

// Measures one instance of the product norm inequality.  Weights are
// optional; when given there must be one per factor plus w0, all of
// dimension 2d.  Errors out on an inadmissible exponent regime.
ProductNormReport product_norm_check(const std::vector<SampledSignal>& factors,
                                     const std::vector<Exponent>& ps,
                                     const std::vector<Exponent>& qs, const Exponent& p0,
                                     const Exponent& q0, Flavor flavor,
                                     const ProductRequest& req,
                                     const std::vector<Weight>& ws = {},
                                     const Weight* w0 = nullptr);

}  // namespace modspace
