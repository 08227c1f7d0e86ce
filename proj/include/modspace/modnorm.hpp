#pragma once

#include <optional>
#include <utility>

#include "modspace/gabor.hpp"
#include "modspace/seqspace.hpp"
#include "modspace/windows.hpp"

namespace modspace {

// ---------------------------------------------------------------------------
// Modulation / amalgam quasi-norm estimators.
//
// Flavor M^{p,q}: inner ell^p over positions, outer ell^q over frequencies.
// Flavor W^{p,q}: inner ell^q over frequencies, outer ell^p over positions.
// Lattice mode reads the Gabor coefficient table on Z^d x piZ^d; dense mode
// takes the mixed Riemann quasi-norm of the full discrete STFT with cell
// volumes as quadrature weights.  The two are equivalent norms, not equal
// ones: the equivalence band is window- and construction-dependent and is
// measured by the tests, never assumed.
// ---------------------------------------------------------------------------

enum class Flavor { M, W };
enum class NormMode { lattice, dense };

struct ModNormRequest {
    Flavor flavor = Flavor::M;
    Exponent p{2.0};
    Exponent q{2.0};
    std::optional<Weight> w;  // phase-space weight, dimension 2d; unset = unweighted
    NormMode mode = NormMode::lattice;
};

double mod_norm(const SampledSignal& f, const WindowPair& win, const ModNormRequest& req);

// Mixed Riemann quasi-norm of a phase-space table.  Exponent p rides the
// position axis and q the frequency axis regardless of order; `order` picks
// which axis is inner (plain: positions inner, star: frequencies inner).
// Exact for the piecewise-constant extension of the sampled table, which is
// what makes the amalgam sandwich below a provable inequality rather than a
// quadrature hope.
double phase_riemann_norm(const DenseSTFT& F, const Exponent& p, const Exponent& q,
                          NormOrder order, const Weight* w = nullptr);

// Wiener amalgam quasi-norm W^r(w, ell^{p,q}) on phase space: local L^r mass
// of F*w per unit cube (j, iota) + [0,1)^{2d}, then the mixed ell^{p,q} of the
// cube table.  Frequency cells generally straddle cube boundaries (the dual
// step 2pi/L is irrational in unit cubes); their mass is split between cubes
// proportionally to overlap, so every interior cube carries total measure
// exactly 1 and the r-monotonicity and sandwich inequalities hold exactly for
// the piecewise-constant extension.
double wiener_norm(const DenseSTFT& F, const Exponent& r, const Exponent& p,
                   const Exponent& q, const Weight& w, NormOrder order);

// Position-only amalgam norm of a d=1 signal: local L^r of f*w per unit
// interval, then ell^p over the intervals.
double wiener_norm_1d(const SampledSignal& f, const Exponent& r, const Exponent& p,
                      const Weight* w = nullptr);

// Lattice-mode norms at two exponent pairs that should embed: p1 <= p2 and
// q1 <= q2 make the (p2,q2) norm the smaller one on finite tables.
struct EmbeddingReport {
    double n1 = 0.0;
    double n2 = 0.0;
    bool consistent = false;
};
EmbeddingReport embedding_check(const SampledSignal& f, const WindowPair& win,
                                std::pair<Exponent, Exponent> pq1,
                                std::pair<Exponent, Exponent> pq2,
                                const Weight* w = nullptr, Flavor flavor = Flavor::M);

}  // namespace modspace
