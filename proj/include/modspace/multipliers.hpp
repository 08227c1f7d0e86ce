#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "modspace/gabor.hpp"
#include "modspace/seqspace.hpp"
#include "modspace/windows.hpp"

namespace modspace {

// ---------------------------------------------------------------------------
// Step multipliers.  A symbol assigns one complex value per half-open cell
// j*b + [0,b)^d of the lattice b Z^d; evaluation is by cell lookup, so grid
// points sit in exactly one cell and the indicator sum is exactly 1.
// step_apply multiplies in position, fourier_step_apply conjugates the same
// multiplication by the unitary Fourier transform (the discrete Hilbert
// transform is the d=1 symbol -i sgn evaluated at cell midpoints).
// ---------------------------------------------------------------------------

struct StepSymbol {
    int dim = 1;
    std::vector<double> b;  // positive cell width per axis
    std::function<cplx(const std::vector<long>&)> value;  // cell index -> a0(j)
    double sup_norm = 1.0;  // declared ell^infinity bound of a0

    std::vector<long> cell_of(const double* t) const;
    cplx at(const double* t) const;
};

StepSymbol constant_symbol(int dim, double b, cplx v);
// -i sgn((m + 1/2) b): the signum symbol read at cell midpoints, d = 1
StepSymbol hilbert_symbol(double b);
StepSymbol alternating_symbol(int dim, double b);  // (-1)^{m_1 + ... + m_d}
// seeded per-cell draws, independent of any grid resolution
StepSymbol random_unimodular_symbol(int dim, double b, std::uint64_t seed);
StepSymbol random_linf_symbol(int dim, double b, std::uint64_t seed, double sup = 1.0);
// finite table (absent cells read as 0)
StepSymbol table_symbol(std::vector<double> b, std::map<std::vector<long>, cplx> cells);

// multiplication by the symbol on the position grid; requires the cells to
// tile the period (L / b_k integral)
SampledSignal step_apply(const StepSymbol& sym, const SampledSignal& f);
// conjugation by fourier(); the symbol is read at the Nyquist-window
// representatives, so no periodicity of the symbol is required
SampledSignal fourier_step_apply(const StepSymbol& sym, const SampledSignal& f);

// ---------------------------------------------------------------------------
// Slope-step symbols: one smooth function a0(j, .) per cell instead of one
// constant.  One-dimensional; each family evaluates derivatives exactly
// (closed forms) or through cached spectral derivatives (sampled family).
// ---------------------------------------------------------------------------

struct SlopeSymbol {
    enum class Family {
        constant_cells,  // a0(j,x) = v[j]
        linear_cells,    // a0(j,x) = v[j] + s[j] * (x - cell center)
        sine,            // a0(j,x) = amp * sin(nu x + phase[j])
        sampled          // a0(j,x) = base(x), one global smooth signal
    };
    Family family = Family::constant_cells;
    double b = 1.0;  // cell width; positive integer so translations stay on-grid
    long j_lo = 0;
    long j_count = 0;
    std::vector<cplx> v;         // per-cell values (constant_cells, linear_cells)
    std::vector<cplx> s;         // per-cell slopes (linear_cells)
    double amp = 1.0;            // sine family
    double nu = 1.0;
    std::vector<double> phase;   // per-cell phases (sine)
    std::vector<SampledSignal> base_deriv;  // sampled family: base and its derivatives
    double sigma = 2.0;          // Gevrey index metadata for envelope_h
};

SlopeSymbol constant_cells_symbol(long j_lo, std::vector<cplx> values, double b = 1.0);
SlopeSymbol linear_cells_symbol(long j_lo, std::vector<cplx> values, std::vector<cplx> slopes,
                                double b = 1.0);
SlopeSymbol sine_symbol(long j_lo, long j_count, double amp, double nu,
                        std::vector<double> phases = {}, double b = 1.0);
// base must live on the grid the symbol will be used with; derivatives are
// cached spectrally up to max_order (at most 8)
SlopeSymbol sampled_symbol(const SampledSignal& base, int max_order, double b = 1.0);

// d^order/dx^order a0(j, x); orders beyond the cached/symbolic range fail
cplx slope_value(const SlopeSymbol& sym, long j, double x, int order = 0);

SampledSignal slope_step_apply(const SlopeSymbol& sym, const SampledSignal& f);
SampledSignal slope_fourier_apply(const SlopeSymbol& sym, const SampledSignal& f);

// T_psi a0 = sum_j a0(j, .) psi(. - j), translations by whole lattice steps
SampledSignal t_psi(const SlopeSymbol& sym, const SampledSignal& psi);

// envelope sup_{beta <= alpha} sup_j |d^beta a0(j, x)| on the grid
SampledSignal envelope_alpha(const SlopeSymbol& sym, const GridSpec& g, int alpha);

// envelope sup_alpha sup_j |d^alpha a0(j,x)| / (h^alpha alpha!^sigma), the
// supremum truncated at max_order; tail_growing reports whether the last
// order still enlarged the supremum somewhere (truncation suspect)
struct EnvelopeH {
    SampledSignal env;
    bool tail_growing = false;
    int orders_used = 0;
};
EnvelopeH envelope_h(const SlopeSymbol& sym, const GridSpec& g, double h, double sigma,
                     int max_order);

// ---------------------------------------------------------------------------
// Gabor matrix of an operator: a(row, col) = (pi/2)^{d/2} (T psi_col, phi_row)
// where psi_col = psi(. - k) e^{i <., kappa>} runs over the lattice and the
// row pairing is against phi(. - j) e^{i <., iota>}.  Entries are stored
// inside the position band |j - k|_infinity <= 2 and frequency offset
// |iota - kappa| <= freq_band * pi; the supremum of |a| outside the position
// band is measured and reported (for step multipliers it must vanish).
// ---------------------------------------------------------------------------

struct OperatorGaborMatrix {
    GridSpec grid;
    int pos_band = 2;
    int freq_band = 0;
    // lattice indices per entry: row (j0, j1, i0, i1), column (k0, k1, kk0, kk1);
    // unused axes stay 0, frequencies in units of pi
    std::vector<std::array<int, 8>> idx;
    std::vector<cplx> a;
    double band_violation = 0.0;  // sup |a| at |j - k|_inf > pos_band
    double decay_sup = 0.0;       // sup |a| * prod <iota_m - kappa_m>
};

OperatorGaborMatrix gabor_matrix(const std::function<SampledSignal(const SampledSignal&)>& op,
                                 const WindowPair& pair, int freq_band);

// apply the stored matrix to analysis coefficients; synthesize() of the
// result reproduces T f up to the dropped tails
GaborCoefficients matrix_apply(const OperatorGaborMatrix& A, const GaborCoefficients& c);

// ---------------------------------------------------------------------------
// Singular kernel machinery: h0(x) = prod <x_m>^{-1}, the unit-cube indicator
// transform, and convolution against h0^theta under theta + 1/p = 1 + 1/q.
// ---------------------------------------------------------------------------

double h0_kernel(const std::vector<double>& x);
cplx chi_hat(const std::vector<double>& xi);  // (2pi)^{-d/2} prod e^{-i xi/2} sinc(xi/2)

struct SingularConvolveResult {
    IndexedCoefficients out;
    double ratio = 0.0;  // ||out||_q / ||b||_p
};
// kernel a(j) = h0(j)^theta on the index window of b; theta in (0,1] with
// theta + 1/p = 1 + 1/q and p, q in (1, infinity)
SingularConvolveResult singular_convolve(double theta, const IndexedCoefficients& b,
                                         const Exponent& p, const Exponent& q);

// ---------------------------------------------------------------------------
// Admissibility of exponent tuples for the multiplier theorems.  Interval
// floors of the shape min(1, .) are treated as closed within 1e-12; the
// strict lower bound of (1, infinity) ranges stays strict (those endpoints
// are genuinely excluded).  Tuple layouts:
//   thm21  {p, q}              step multiplier on W^{p,q}
//   thm21  {p, q1, q2}         step multiplier M^{p,q1} -> M^{p,q2}
//   thm22  {p, q}              Fourier step multiplier on M^{p,q}
//   thm22  {q, p1, p2}         Fourier step multiplier W^{p1,q} -> W^{p2,q}
//   thm41  {p, p1, p2, q}          slope step on W^{p1,q} -> W^{p2,q}
//   thm41  {p, p1, p2, q1, q2}     slope step M^{p1,q1} -> M^{p2,q2}
//   thm42  {q, q1, q2, p}          Fourier slope step M^{p,q1} -> M^{p,q2}
//   thm42  {q, q1, q2, p1, p2}     Fourier slope step W^{p1,q1} -> W^{p2,q2}
//   cor45 / cor46: same layouts as thm41 / thm42 with the range floor taken
//   at min(1,p) resp. min(1,q) instead of min(1,p2) resp. min(1,q2); the two
//   statements genuinely differ and admissibility_discrepancy enumerates the
//   disagreement zone.
// ---------------------------------------------------------------------------

enum class TheoremId { thm21, thm22, thm41, thm42, cor45, cor46 };

bool exponents_admissible(TheoremId t, const std::vector<Exponent>& e);

std::vector<std::vector<Exponent>> admissibility_discrepancy(
    TheoremId thm, TheoremId cor, const std::vector<Exponent>& grid);

}  // namespace modspace
