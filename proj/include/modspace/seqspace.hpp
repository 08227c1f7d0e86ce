#pragma once

#include <vector>

#include "modspace/util.hpp"
#include "modspace/weights.hpp"

namespace modspace {

// ---------------------------------------------------------------------------
// Lebesgue exponents in (0, infinity].  Values below 1 are legal everywhere;
// those are the quasi-norm cases all the admissibility arithmetic is about.
// ---------------------------------------------------------------------------

struct Exponent {
    double v = 1.0;

    static Exponent of(double x);
    static Exponent infinity();
    bool is_inf() const { return std::isinf(v); }
    double inv() const { return is_inf() ? 0.0 : 1.0 / v; }
    bool operator==(const Exponent&) const = default;
};

// max(1, 1/p), the exponent that controls the p-triangle inequality
inline double one_over_min1(const Exponent& p) { return std::max(1.0, p.inv()); }

// R_N(p_1..p_N) = sum_j max(1,1/p_j) - min_j max(1,1/p_j); the defect that a
// quasi-Banach Young inequality pays relative to the classical one.
double r_n(const std::vector<Exponent>& ps);

// R_{r,N}(q_1..q_N) = sum 1/r_j - min 1/r_j with r_j = min(1, q_j, r);
// reduces to R_N when r >= 1.
double r_rn(const Exponent& r, const std::vector<Exponent>& qs);

// 1/p0 <= sum 1/p_j - R_N(p) resp. 1/q0 <= sum 1/q_j, with 1e-12 slack.
bool young_admissible(const Exponent& p0, const std::vector<Exponent>& ps);
bool holder_admissible(const Exponent& q0, const std::vector<Exponent>& qs);

// ---------------------------------------------------------------------------
// Two-axis coefficient tables.  Axis j is the position-like axis, axis k the
// frequency-like one; either may be a flattened multi-index, so each axis
// carries a list of physical coordinates (dj resp. dk doubles per index) at
// which weights are sampled.  Plain sequences are tables with a singleton k
// axis and integer j lattice metadata for convolution.
// ---------------------------------------------------------------------------

struct IndexedCoefficients {
    std::size_t j_count = 0;
    std::size_t k_count = 1;
    int dj = 1;  // coordinate dimension of the j axis
    int dk = 0;  // coordinate dimension of the k axis
    std::vector<cplx> value;    // row-major [j][k]
    std::vector<double> j_coord;  // j_count * dj physical coordinates
    std::vector<double> k_coord;  // k_count * dk physical coordinates
    long j_lo = 0;       // 1-axis lattice offset (index of first entry)
    double j_step = 1.0; // physical step of the 1-axis lattice

    cplx& at(std::size_t j, std::size_t k) { return value[j * k_count + k]; }
    const cplx& at(std::size_t j, std::size_t k) const { return value[j * k_count + k]; }
    bool is_sequence() const { return k_count == 1 && dk == 0; }
};

IndexedCoefficients make_sequence(long j_lo, double j_step, std::vector<cplx> values);

// ell^p of a nonnegative vector, max-factored so p < 1 neither under- nor
// overflows; p = infinity is the supremum.
double lp_norm(const std::vector<double>& vals, const Exponent& p);

enum class NormOrder {
    plain,  // inner ell^p over j, outer ell^q over k   (M-flavor)
    star    // inner ell^q over k, outer ell^p over j   (W-flavor)
};

// Weighted mixed quasi-norm.  The weight (if any) is sampled at the
// concatenated coordinates (j_coord[j], k_coord[k]) and must have dimension
// dj + dk.
double quasi_norm(const IndexedCoefficients& c, const Exponent& p, const Exponent& q,
                  NormOrder order, const Weight* w = nullptr);

// convenience for plain sequences
double seq_norm(const IndexedCoefficients& c, const Exponent& p, const Weight* w = nullptr);

// Counting-measure convolution of plain sequences on the same lattice step;
// index offsets add.
IndexedCoefficients convolve(const IndexedCoefficients& a, const IndexedCoefficients& b);

// ---------------------------------------------------------------------------
// Inequality checks.  Both return the measured sides plus the exact weight
// constant on the factors' support, so `holds` tests the provable inequality
//   lhs <= weight_constant * prod rhs_j  (1 + 1e-12 slack)
// whenever the exponent tuple is admissible.
// ---------------------------------------------------------------------------

struct Factor {
    IndexedCoefficients seq;
    Exponent p;
    const Weight* w = nullptr;  // dimension dj when set
};

struct InequalityReport {
    bool admissible = false;
    double lhs = 0.0;
    double rhs_product = 0.0;
    double weight_constant = 1.0;
    double ratio = 0.0;  // lhs / (C * rhs), 0 when rhs vanishes
    bool holds = false;
};

InequalityReport check_young(const Exponent& p0, const Weight* w0,
                             const std::vector<Factor>& factors);
InequalityReport check_holder(const Exponent& q0, const Weight* w0,
                              const std::vector<Factor>& factors);

}  // namespace modspace
