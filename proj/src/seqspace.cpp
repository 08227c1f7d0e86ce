#include "modspace/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace modspace {

Exponent Exponent::of(double x) {
    require(x > 0.0, "Exponent: must be positive (use infinity() for sup)");
    return Exponent{x};
}

Exponent Exponent::infinity() { return Exponent{std::numeric_limits<double>::infinity()}; }

double r_n(const std::vector<Exponent>& ps) {
    require(!ps.empty(), "r_n: empty exponent list");
    double sum = 0.0, least = std::numeric_limits<double>::infinity();
    for (const Exponent& p : ps) {
        double h = one_over_min1(p);
        sum += h;
        least = std::min(least, h);
    }
    return sum - least;
}

double r_rn(const Exponent& r, const std::vector<Exponent>& qs) {
    require(!qs.empty(), "r_rn: empty exponent list");
    double sum = 0.0, least = std::numeric_limits<double>::infinity();
    for (const Exponent& q : qs) {
        double rj = std::min({1.0, q.v, r.v});  // in (0,1], so 1/rj >= 1
        double h = 1.0 / rj;
        sum += h;
        least = std::min(least, h);
    }
    return sum - least;
}

bool young_admissible(const Exponent& p0, const std::vector<Exponent>& ps) {
    double budget = 0.0;
    for (const Exponent& p : ps) budget += p.inv();
    return p0.inv() <= budget - r_n(ps) + 1e-12;
}

bool holder_admissible(const Exponent& q0, const std::vector<Exponent>& qs) {
    double budget = 0.0;
    for (const Exponent& q : qs) budget += q.inv();
    return q0.inv() <= budget + 1e-12;
}

IndexedCoefficients make_sequence(long j_lo, double j_step, std::vector<cplx> values) {
    IndexedCoefficients c;
    c.j_count = values.size();
    c.k_count = 1;
    c.dj = 1;
    c.dk = 0;
    c.value = std::move(values);
    c.j_lo = j_lo;
    c.j_step = j_step;
    c.j_coord.resize(c.j_count);
    for (std::size_t i = 0; i < c.j_count; ++i)
        c.j_coord[i] = (static_cast<double>(j_lo) + static_cast<double>(i)) * j_step;
    return c;
}

double lp_norm(const std::vector<double>& vals, const Exponent& p) {
    if (p.is_inf()) {
        double m = 0.0;
        for (double v : vals) m = std::max(m, v);
        return m;
    }
    double m = 0.0;
    for (double v : vals) m = std::max(m, v);
    if (m == 0.0) return 0.0;
    // factor out the max so v^p stays in range for p << 1 and p >> 1
    double s = 0.0;
    for (double v : vals) {
        if (v > 0.0) s += std::pow(v / m, p.v);
    }
    return m * std::pow(s, 1.0 / p.v);
}

namespace {

double weighted_abs(const IndexedCoefficients& c, std::size_t j, std::size_t k, const Weight* w,
                    std::vector<double>& pt) {
    double a = std::abs(c.at(j, k));
    if (w == nullptr || a == 0.0) return a;
    for (int i = 0; i < c.dj; ++i) pt[static_cast<std::size_t>(i)] = c.j_coord[j * c.dj + i];
    for (int i = 0; i < c.dk; ++i)
        pt[static_cast<std::size_t>(c.dj + i)] = c.k_coord[k * c.dk + i];
    return a * w->eval(pt.data());
}

}  // namespace

double quasi_norm(const IndexedCoefficients& c, const Exponent& p, const Exponent& q,
                  NormOrder order, const Weight* w) {
    require(c.value.size() == c.j_count * c.k_count, "quasi_norm: table shape mismatch");
    if (w != nullptr)
        require(w->dim() == c.dj + c.dk, "quasi_norm: weight dimension mismatch");
    std::vector<double> pt(static_cast<std::size_t>(c.dj + c.dk));
    if (order == NormOrder::plain) {
        std::vector<double> outer(c.k_count);
        std::vector<double> inner(c.j_count);
        for (std::size_t k = 0; k < c.k_count; ++k) {
            for (std::size_t j = 0; j < c.j_count; ++j) inner[j] = weighted_abs(c, j, k, w, pt);
            outer[k] = lp_norm(inner, p);
        }
        return lp_norm(outer, q);
    }
    std::vector<double> outer(c.j_count);
    std::vector<double> inner(c.k_count);
    for (std::size_t j = 0; j < c.j_count; ++j) {
        for (std::size_t k = 0; k < c.k_count; ++k) inner[k] = weighted_abs(c, j, k, w, pt);
        outer[j] = lp_norm(inner, q);
    }
    return lp_norm(outer, p);
}

double seq_norm(const IndexedCoefficients& c, const Exponent& p, const Weight* w) {
    require(c.is_sequence(), "seq_norm: not a plain sequence");
    return quasi_norm(c, p, p, NormOrder::plain, w);
}

IndexedCoefficients convolve(const IndexedCoefficients& a, const IndexedCoefficients& b) {
    require(a.is_sequence() && b.is_sequence(), "convolve: plain sequences required");
    require(a.j_step == b.j_step, "convolve: lattice step mismatch");
    require(a.j_count > 0 && b.j_count > 0, "convolve: empty sequence");
    std::size_t out_len = a.j_count + b.j_count - 1;
    std::vector<cplx> out(out_len, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < a.j_count; ++i) {
        if (a.value[i] == cplx{0.0, 0.0}) continue;
        for (std::size_t k = 0; k < b.j_count; ++k) out[i + k] += a.value[i] * b.value[k];
    }
    return make_sequence(a.j_lo + b.j_lo, a.j_step, std::move(out));
}

namespace {

// Exact weight constant on the factors' support: max over nonzero index
// tuples of w0(sum of coordinates) / prod w_j(coordinate_j).  This is the
// constant the transfer step of the weighted inequality actually uses, so
// admissible exponents must satisfy lhs <= C * rhs with it.
double support_weight_constant(const Weight* w0, const std::vector<Factor>& factors,
                               bool convolution) {
    bool any = w0 != nullptr;
    for (const Factor& f : factors) any = any || f.w != nullptr;
    if (!any) return 1.0;

    double worst = 0.0;
    std::vector<std::size_t> idx(factors.size(), 0);
    for (;;) {
        bool nonzero = true;
        for (std::size_t f = 0; f < factors.size() && nonzero; ++f)
            nonzero = factors[f].seq.value[idx[f]] != cplx{0.0, 0.0};
        if (nonzero) {
            double sum = 0.0, denom = 1.0;
            bool in_common = true;
            double common = factors[0].seq.j_coord[idx[0]];
            for (std::size_t f = 0; f < factors.size(); ++f) {
                double x = factors[f].seq.j_coord[idx[f]];
                sum += x;
                if (x != common) in_common = false;
                if (factors[f].w != nullptr) denom *= factors[f].w->eval(&x);
            }
            // Hoelder compares weights at one shared point, Young at the sum.
            if (convolution || in_common) {
                double at = convolution ? sum : common;
                double num = w0 != nullptr ? w0->eval(&at) : 1.0;
                worst = std::max(worst, num / denom);
            }
        }
        std::size_t f = 0;
        while (f < factors.size() && ++idx[f] == factors[f].seq.j_count) idx[f++] = 0;
        if (f == factors.size()) break;
    }
    return worst == 0.0 ? 1.0 : worst;
}

InequalityReport finish(bool admissible, double lhs, double rhs, double cw) {
    InequalityReport rep;
    rep.admissible = admissible;
    rep.lhs = lhs;
    rep.rhs_product = rhs;
    rep.weight_constant = cw;
    double bound = cw * rhs;
    rep.ratio = bound > 0.0 ? lhs / bound : (lhs > 0.0 ? std::numeric_limits<double>::infinity()
                                                       : 0.0);
    rep.holds = lhs <= bound * (1.0 + 1e-12) || lhs == 0.0;
    return rep;
}

}  // namespace

InequalityReport check_young(const Exponent& p0, const Weight* w0,
                             const std::vector<Factor>& factors) {
    require(factors.size() >= 2, "check_young: need at least two factors");
    std::vector<Exponent> ps;
    for (const Factor& f : factors) {
        require(f.seq.is_sequence(), "check_young: plain sequences required");
        ps.push_back(f.p);
    }
    IndexedCoefficients conv = factors[0].seq;
    for (std::size_t f = 1; f < factors.size(); ++f) conv = convolve(conv, factors[f].seq);

    double lhs = seq_norm(conv, p0, w0);
    double rhs = 1.0;
    for (const Factor& f : factors) rhs *= seq_norm(f.seq, f.p, f.w);
    double cw = support_weight_constant(w0, factors, /*convolution=*/true);
    return finish(young_admissible(p0, ps), lhs, rhs, cw);
}

InequalityReport check_holder(const Exponent& q0, const Weight* w0,
                              const std::vector<Factor>& factors) {
    require(factors.size() >= 2, "check_holder: need at least two factors");
    std::vector<Exponent> qs;
    for (const Factor& f : factors) {
        require(f.seq.is_sequence(), "check_holder: plain sequences required");
        require(f.seq.j_step == factors[0].seq.j_step, "check_holder: lattice step mismatch");
        qs.push_back(f.p);
    }
    // pointwise product over the intersection of index ranges
    long lo = factors[0].seq.j_lo;
    long hi = lo + static_cast<long>(factors[0].seq.j_count);
    for (const Factor& f : factors) {
        lo = std::max(lo, f.seq.j_lo);
        hi = std::min(hi, f.seq.j_lo + static_cast<long>(f.seq.j_count));
    }
    std::vector<cplx> prod;
    for (long j = lo; j < hi; ++j) {
        cplx v{1.0, 0.0};
        for (const Factor& f : factors)
            v *= f.seq.value[static_cast<std::size_t>(j - f.seq.j_lo)];
        prod.push_back(v);
    }
    IndexedCoefficients p_seq =
        make_sequence(lo, factors[0].seq.j_step,
                      prod.empty() ? std::vector<cplx>{cplx{0.0, 0.0}} : std::move(prod));

    double lhs = seq_norm(p_seq, q0, w0);
    double rhs = 1.0;
    for (const Factor& f : factors) rhs *= seq_norm(f.seq, f.p, f.w);
    double cw = support_weight_constant(w0, factors, /*convolution=*/false);
    return finish(holder_admissible(q0, qs), lhs, rhs, cw);
}

}  // namespace modspace
