#include "modspace/multipliers.hpp"

#include <algorithm>
#include <cmath>

namespace modspace {

namespace {

long cell_index(double t, double b) { return static_cast<long>(std::floor(t / b + 1e-9)); }

// fold a cell multi-index into a stream position for seeded draws
std::uint64_t cell_seed(std::uint64_t seed, const std::vector<long>& m) {
    std::uint64_t s = seed;
    for (long c : m) s = derive_seed(s, static_cast<std::uint64_t>(c + (1LL << 32)));
    return s;
}

int wrap_to_half(int delta, int span) {
    int w = ((delta % span) + span + span / 2) % span - span / 2;
    return w;
}

}  // namespace

std::vector<long> StepSymbol::cell_of(const double* t) const {
    std::vector<long> m(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) m[static_cast<std::size_t>(a)] = cell_index(t[a], b[static_cast<std::size_t>(a)]);
    return m;
}

cplx StepSymbol::at(const double* t) const { return value(cell_of(t)); }

StepSymbol constant_symbol(int dim, double b, cplx v) {
    require(dim >= 1 && b > 0.0, "constant_symbol: bad parameters");
    StepSymbol s;
    s.dim = dim;
    s.b.assign(static_cast<std::size_t>(dim), b);
    s.value = [v](const std::vector<long>&) { return v; };
    s.sup_norm = std::abs(v);
    return s;
}

StepSymbol hilbert_symbol(double b) {
    require(b > 0.0, "hilbert_symbol: cell width must be positive");
    StepSymbol s;
    s.dim = 1;
    s.b = {b};
    s.value = [b](const std::vector<long>& m) {
        double mid = (static_cast<double>(m[0]) + 0.5) * b;
        return cplx{0.0, mid > 0.0 ? -1.0 : 1.0};
    };
    s.sup_norm = 1.0;
    return s;
}

StepSymbol alternating_symbol(int dim, double b) {
    require(dim >= 1 && b > 0.0, "alternating_symbol: bad parameters");
    StepSymbol s;
    s.dim = dim;
    s.b.assign(static_cast<std::size_t>(dim), b);
    s.value = [](const std::vector<long>& m) {
        long sum = 0;
        for (long c : m) sum += c;
        return cplx{(sum & 1L) ? -1.0 : 1.0, 0.0};
    };
    s.sup_norm = 1.0;
    return s;
}

StepSymbol random_unimodular_symbol(int dim, double b, std::uint64_t seed) {
    require(dim >= 1 && b > 0.0, "random_unimodular_symbol: bad parameters");
    StepSymbol s;
    s.dim = dim;
    s.b.assign(static_cast<std::size_t>(dim), b);
    s.value = [seed](const std::vector<long>& m) {
        SplitMix64 rng{cell_seed(seed, m)};
        double th = 2.0 * pi * rng.uniform();
        return cplx{std::cos(th), std::sin(th)};
    };
    s.sup_norm = 1.0;
    return s;
}

StepSymbol random_linf_symbol(int dim, double b, std::uint64_t seed, double sup) {
    require(dim >= 1 && b > 0.0 && sup > 0.0, "random_linf_symbol: bad parameters");
    StepSymbol s;
    s.dim = dim;
    s.b.assign(static_cast<std::size_t>(dim), b);
    s.value = [seed, sup](const std::vector<long>& m) {
        SplitMix64 rng{cell_seed(seed, m)};
        double th = 2.0 * pi * rng.uniform();
        double rad = sup * std::sqrt(rng.uniform());
        return cplx{rad * std::cos(th), rad * std::sin(th)};
    };
    s.sup_norm = sup;
    return s;
}

StepSymbol table_symbol(std::vector<double> b, std::map<std::vector<long>, cplx> cells) {
    require(!b.empty(), "table_symbol: empty width vector");
    for (double w : b) require(w > 0.0, "table_symbol: widths must be positive");
    StepSymbol s;
    s.dim = static_cast<int>(b.size());
    s.b = std::move(b);
    double sup = 0.0;
    for (const auto& [k, v] : cells) {
        require(static_cast<int>(k.size()) == s.dim, "table_symbol: cell index dimension");
        sup = std::max(sup, std::abs(v));
    }
    s.sup_norm = sup;
    s.value = [table = std::move(cells)](const std::vector<long>& m) {
        auto it = table.find(m);
        return it == table.end() ? cplx{0.0, 0.0} : it->second;
    };
    return s;
}

SampledSignal step_apply(const StepSymbol& sym, const SampledSignal& f) {
    const GridSpec g = f.grid;
    require(sym.dim == g.d, "step_apply: symbol dimension mismatch");
    for (double w : sym.b) {
        double ratio = g.L / w;
        require(std::abs(ratio - std::round(ratio)) <= 1e-9 * ratio,
                "step_apply: cells do not tile the period");
    }
    SampledSignal out = f;
    const int N = g.axis();
    std::vector<double> t(static_cast<std::size_t>(g.d));
    for (std::size_t i = 0; i < out.v.size(); ++i) {
        if (g.d == 1) {
            t[0] = g.x(static_cast<int>(i));
        } else {
            t[0] = g.x(static_cast<int>(i) / N);
            t[1] = g.x(static_cast<int>(i) % N);
        }
        out.v[i] *= sym.at(t.data());
    }
    return out;
}

SampledSignal fourier_step_apply(const StepSymbol& sym, const SampledSignal& f) {
    const GridSpec g = f.grid;
    require(sym.dim == g.d, "fourier_step_apply: symbol dimension mismatch");
    SampledSignal fhat = fourier(f, FourierDir::forward);
    const int N = g.axis();
    std::vector<double> t(static_cast<std::size_t>(g.d));
    for (std::size_t i = 0; i < fhat.v.size(); ++i) {
        if (g.d == 1) {
            t[0] = g.xi(static_cast<int>(i));
        } else {
            t[0] = g.xi(static_cast<int>(i) / N);
            t[1] = g.xi(static_cast<int>(i) % N);
        }
        fhat.v[i] *= sym.at(t.data());
    }
    return fourier(fhat, FourierDir::inverse);
}

// ---------------------------------------------------------------------------
// Slope-step symbols
// ---------------------------------------------------------------------------

SlopeSymbol constant_cells_symbol(long j_lo, std::vector<cplx> values, double b) {
    require(!values.empty() && b > 0.0, "constant_cells_symbol: bad parameters");
    SlopeSymbol s;
    s.family = SlopeSymbol::Family::constant_cells;
    s.b = b;
    s.j_lo = j_lo;
    s.j_count = static_cast<long>(values.size());
    s.v = std::move(values);
    return s;
}

SlopeSymbol linear_cells_symbol(long j_lo, std::vector<cplx> values, std::vector<cplx> slopes,
                                double b) {
    require(!values.empty() && values.size() == slopes.size() && b > 0.0,
            "linear_cells_symbol: bad parameters");
    SlopeSymbol s;
    s.family = SlopeSymbol::Family::linear_cells;
    s.b = b;
    s.j_lo = j_lo;
    s.j_count = static_cast<long>(values.size());
    s.v = std::move(values);
    s.s = std::move(slopes);
    return s;
}

SlopeSymbol sine_symbol(long j_lo, long j_count, double amp, double nu,
                        std::vector<double> phases, double b) {
    require(j_count > 0 && b > 0.0 && nu > 0.0, "sine_symbol: bad parameters");
    require(phases.empty() || static_cast<long>(phases.size()) == j_count,
            "sine_symbol: phase count mismatch");
    SlopeSymbol s;
    s.family = SlopeSymbol::Family::sine;
    s.b = b;
    s.j_lo = j_lo;
    s.j_count = j_count;
    s.amp = amp;
    s.nu = nu;
    s.phase = std::move(phases);
    return s;
}

SlopeSymbol sampled_symbol(const SampledSignal& base, int max_order, double b) {
    require(base.grid.d == 1, "sampled_symbol: one-dimensional base signals only");
    require(max_order >= 0 && max_order <= 8, "sampled_symbol: derivative order out of range");
    require(b > 0.0, "sampled_symbol: bad cell width");
    SlopeSymbol s;
    s.family = SlopeSymbol::Family::sampled;
    s.b = b;
    // cells covering the base period [-L/2, L/2); the right endpoint belongs
    // to the next period, so pull it inward by more than the boundary snap
    // inside cell_index or the wrap cell gets counted twice
    s.j_lo = cell_index(-0.5 * base.grid.L, b);
    s.j_count = cell_index(0.5 * base.grid.L - 1e-6 * b, b) - s.j_lo + 1;
    s.base_deriv.reserve(static_cast<std::size_t>(max_order) + 1);
    s.base_deriv.push_back(base);
    for (int k = 1; k <= max_order; ++k)
        s.base_deriv.push_back(spectral_derivative(s.base_deriv.back(), {1}));
    return s;
}

cplx slope_value(const SlopeSymbol& sym, long j, double x, int order) {
    require(order >= 0, "slope_value: negative order");
    if (j < sym.j_lo || j >= sym.j_lo + sym.j_count) return {0.0, 0.0};
    std::size_t cell = static_cast<std::size_t>(j - sym.j_lo);
    switch (sym.family) {
        case SlopeSymbol::Family::constant_cells:
            return order == 0 ? sym.v[cell] : cplx{0.0, 0.0};
        case SlopeSymbol::Family::linear_cells: {
            if (order == 0) {
                double center = (static_cast<double>(j) + 0.5) * sym.b;
                return sym.v[cell] + sym.s[cell] * (x - center);
            }
            return order == 1 ? sym.s[cell] : cplx{0.0, 0.0};
        }
        case SlopeSymbol::Family::sine: {
            double ph = sym.phase.empty() ? 0.0 : sym.phase[cell];
            double arg = sym.nu * x + ph + 0.5 * pi * order;
            return cplx{sym.amp * std::pow(sym.nu, order) * std::sin(arg), 0.0};
        }
        case SlopeSymbol::Family::sampled: {
            require(order < static_cast<int>(sym.base_deriv.size()),
                    "slope_value: order too high for sampled symbols");
            const SampledSignal& d = sym.base_deriv[static_cast<std::size_t>(order)];
            const GridSpec g = d.grid;
            double rel = (x + 0.5 * g.L) * g.n;
            long idx = std::lround(rel);
            require(std::abs(rel - static_cast<double>(idx)) <= 1e-6,
                    "slope_value: sampled symbols evaluate on their own grid");
            int N = g.axis();
            return d.at(static_cast<int>(((idx % N) + N) % N));  // periodic lift
        }
    }
    fail("slope_value: unreachable");
}

SampledSignal slope_step_apply(const SlopeSymbol& sym, const SampledSignal& f) {
    const GridSpec g = f.grid;
    require(g.d == 1, "slope_step_apply: one-dimensional signals only");
    SampledSignal out = f;
    for (int i = 0; i < g.axis(); ++i) {
        double x = g.x(i);
        out.v[static_cast<std::size_t>(i)] *= slope_value(sym, cell_index(x, sym.b), x, 0);
    }
    return out;
}

SampledSignal slope_fourier_apply(const SlopeSymbol& sym, const SampledSignal& f) {
    const GridSpec g = f.grid;
    require(g.d == 1, "slope_fourier_apply: one-dimensional signals only");
    SampledSignal fhat = fourier(f, FourierDir::forward);
    for (int i = 0; i < g.axis(); ++i) {
        double xi = g.xi(i);
        fhat.v[static_cast<std::size_t>(i)] *= slope_value(sym, cell_index(xi, sym.b), xi, 0);
    }
    return fourier(fhat, FourierDir::inverse);
}

SampledSignal t_psi(const SlopeSymbol& sym, const SampledSignal& psi) {
    const GridSpec g = psi.grid;
    require(g.d == 1, "t_psi: one-dimensional windows only");
    double bi = std::round(sym.b);
    require(std::abs(sym.b - bi) <= 1e-12 && bi >= 1.0,
            "t_psi: lattice translations need a positive integer cell width");
    const int N = g.axis(), n = g.n;
    const long step = static_cast<long>(bi) * n;
    SampledSignal out = zero_signal(g);
    // psi is supported in [-1, 1]; write a0(j, x) psi(x - j b) at the
    // physical (unwrapped) point x = j b + m / n, folded onto the torus
    for (long j = sym.j_lo; j < sym.j_lo + sym.j_count; ++j) {
        for (int m = -n; m < n; ++m) {
            cplx w = psi.at(N / 2 + m);
            if (w == cplx{0.0, 0.0}) continue;
            double p = static_cast<double>(j) * sym.b + static_cast<double>(m) / n;
            long idx = j * step + m + N / 2;
            out.v[static_cast<std::size_t>(((idx % N) + N) % N)] += slope_value(sym, j, p, 0) * w;
        }
    }
    return out;
}

SampledSignal envelope_alpha(const SlopeSymbol& sym, const GridSpec& g, int alpha) {
    require(g.d == 1, "envelope_alpha: one-dimensional grids only");
    require(alpha >= 0, "envelope_alpha: negative order");
    SampledSignal out = zero_signal(g);
    for (int i = 0; i < g.axis(); ++i) {
        double x = g.x(i), best = 0.0;
        for (int beta = 0; beta <= alpha; ++beta)
            for (long j = sym.j_lo; j < sym.j_lo + sym.j_count; ++j)
                best = std::max(best, std::abs(slope_value(sym, j, x, beta)));
        out.v[static_cast<std::size_t>(i)] = best;
    }
    return out;
}

EnvelopeH envelope_h(const SlopeSymbol& sym, const GridSpec& g, double h, double sigma,
                     int max_order) {
    require(g.d == 1, "envelope_h: one-dimensional grids only");
    require(h > 0.0 && sigma > 0.0 && max_order >= 0, "envelope_h: bad parameters");
    EnvelopeH rep;
    rep.orders_used = max_order;
    if (sym.family == SlopeSymbol::Family::sampled)
        rep.orders_used = std::min(max_order, static_cast<int>(sym.base_deriv.size()) - 1);
    rep.env = zero_signal(g);
    double denom = 1.0, factorial = 1.0;
    std::vector<double> best(static_cast<std::size_t>(g.axis()), 0.0);
    std::vector<int> argmax(static_cast<std::size_t>(g.axis()), 0);
    for (int k = 0; k <= rep.orders_used; ++k) {
        if (k > 0) {
            factorial *= k;
            denom = std::pow(h, k) * std::pow(factorial, sigma);
        }
        for (int i = 0; i < g.axis(); ++i) {
            double x = g.x(i), sup = 0.0;
            for (long j = sym.j_lo; j < sym.j_lo + sym.j_count; ++j)
                sup = std::max(sup, std::abs(slope_value(sym, j, x, k)));
            double term = sup / denom;
            if (term > best[static_cast<std::size_t>(i)]) {
                best[static_cast<std::size_t>(i)] = term;
                argmax[static_cast<std::size_t>(i)] = k;
            }
        }
    }
    for (int i = 0; i < g.axis(); ++i) {
        rep.env.v[static_cast<std::size_t>(i)] = best[static_cast<std::size_t>(i)];
        if (argmax[static_cast<std::size_t>(i)] == rep.orders_used && rep.orders_used > 0)
            rep.tail_growing = true;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Gabor matrix
// ---------------------------------------------------------------------------

OperatorGaborMatrix gabor_matrix(const std::function<SampledSignal(const SampledSignal&)>& op,
                                 const WindowPair& pair, int freq_band) {
    const GridSpec g = pair.grid;
    require(freq_band >= 0, "gabor_matrix: negative frequency band");
    const int n = g.n, L = g.L;
    const int P_axis = L, K_axis = 2 * n;
    const std::size_t P = g.d == 1 ? P_axis : static_cast<std::size_t>(P_axis) * P_axis;
    const std::size_t K = g.d == 1 ? static_cast<std::size_t>(K_axis)
                                   : static_cast<std::size_t>(K_axis) * K_axis;
    const std::size_t cols = P * K;
    const double scl = std::pow(0.5 * pi, 0.5 * g.d) * std::pow(2.0, g.d);

    OperatorGaborMatrix A;
    A.grid = g;
    A.freq_band = freq_band;

    struct ColumnOut {
        std::vector<std::array<int, 8>> idx;
        std::vector<cplx> a;
        double violation = 0.0;
        double decay = 0.0;
    };
    std::vector<ColumnOut> outs(cols);

    parallel_for(cols, [&](std::size_t col) {
        std::size_t kp = col / K, kf = col % K;
        int k0, k1 = 0, kk0, kk1 = 0;
        if (g.d == 1) {
            k0 = static_cast<int>(kp) - L / 2;
            kk0 = static_cast<int>(kf) - n;
        } else {
            k0 = static_cast<int>(kp) / P_axis - L / 2;
            k1 = static_cast<int>(kp) % P_axis - L / 2;
            kk0 = static_cast<int>(kf) / K_axis - n;
            kk1 = static_cast<int>(kf) % K_axis - n;
        }
        // column generator psi(. - k) e^{i <., kappa>}, kappa = pi kk:
        // modulate() takes dual-grid index units, and pi kk / dxi = kk L / 2
        std::vector<int> steps, freq;
        if (g.d == 1) {
            steps = {k0 * n};
            freq = {kk0 * L / 2};
        } else {
            steps = {k0 * n, k1 * n};
            freq = {kk0 * L / 2, kk1 * L / 2};
        }
        SampledSignal gen = modulate(translate(pair.psi, steps), freq);
        GaborCoefficients c = analyze(op(gen), pair.phi);
        ColumnOut& o = outs[col];
        for (std::size_t jp = 0; jp < c.table.j_count; ++jp) {
            for (std::size_t jf = 0; jf < c.table.k_count; ++jf) {
                cplx a = c.table.at(jp, jf) * scl;
                int j0, j1 = 0, i0, i1 = 0;
                if (g.d == 1) {
                    j0 = static_cast<int>(jp) - L / 2;
                    i0 = static_cast<int>(jf) - n;
                } else {
                    j0 = static_cast<int>(jp) / P_axis - L / 2;
                    j1 = static_cast<int>(jp) % P_axis - L / 2;
                    i0 = static_cast<int>(jf) / K_axis - n;
                    i1 = static_cast<int>(jf) % K_axis - n;
                }
                int dp0 = wrap_to_half(j0 - k0, L), dp1 = wrap_to_half(j1 - k1, L);
                int df0 = wrap_to_half(i0 - kk0, 2 * n), df1 = wrap_to_half(i1 - kk1, 2 * n);
                if (g.d == 1) dp1 = df1 = 0;
                double mag = std::abs(a);
                bool in_pos = std::abs(dp0) <= A.pos_band && std::abs(dp1) <= A.pos_band;
                if (!in_pos) {
                    o.violation = std::max(o.violation, mag);
                    continue;
                }
                double dec = mag * std::sqrt(1.0 + sqr(pi * df0));
                if (g.d == 2) dec *= std::sqrt(1.0 + sqr(pi * df1));
                o.decay = std::max(o.decay, dec);
                if (std::abs(df0) <= freq_band && std::abs(df1) <= freq_band) {
                    o.idx.push_back({j0, j1, i0, i1, k0, k1, kk0, kk1});
                    o.a.push_back(a);
                }
            }
        }
    });

    std::size_t total = 0;
    for (const ColumnOut& o : outs) total += o.a.size();
    A.idx.reserve(total);
    A.a.reserve(total);
    for (ColumnOut& o : outs) {
        A.band_violation = std::max(A.band_violation, o.violation);
        A.decay_sup = std::max(A.decay_sup, o.decay);
        A.idx.insert(A.idx.end(), o.idx.begin(), o.idx.end());
        A.a.insert(A.a.end(), o.a.begin(), o.a.end());
    }
    return A;
}

GaborCoefficients matrix_apply(const OperatorGaborMatrix& A, const GaborCoefficients& c) {
    const GridSpec g = A.grid;
    require(c.grid == g, "matrix_apply: grid mismatch");
    const int n = g.n, L = g.L;
    const int P_axis = L, K_axis = 2 * n;
    GaborCoefficients out = c;
    std::fill(out.table.value.begin(), out.table.value.end(), cplx{0.0, 0.0});
    out.tail_ratio = 0.0;
    const double unscale = 1.0 / (std::pow(0.5 * pi, 0.5 * g.d) * std::pow(2.0, g.d));
    auto pos_flat = [&](int a0, int a1) {
        return g.d == 1 ? static_cast<std::size_t>(a0 + L / 2)
                        : static_cast<std::size_t>(a0 + L / 2) * P_axis +
                              static_cast<std::size_t>(a1 + L / 2);
    };
    auto freq_flat = [&](int a0, int a1) {
        return g.d == 1 ? static_cast<std::size_t>(a0 + n)
                        : static_cast<std::size_t>(a0 + n) * K_axis +
                              static_cast<std::size_t>(a1 + n);
    };
    for (std::size_t e = 0; e < A.a.size(); ++e) {
        const std::array<int, 8>& ix = A.idx[e];
        out.table.at(pos_flat(ix[0], ix[1]), freq_flat(ix[2], ix[3])) +=
            A.a[e] * unscale * c.table.at(pos_flat(ix[4], ix[5]), freq_flat(ix[6], ix[7]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Singular kernels and admissibility arithmetic
// ---------------------------------------------------------------------------

double h0_kernel(const std::vector<double>& x) {
    double v = 1.0;
    for (double c : x) v /= std::sqrt(1.0 + c * c);
    return v;
}

cplx chi_hat(const std::vector<double>& xi) {
    cplx v = std::pow(2.0 * pi, -0.5 * static_cast<double>(xi.size()));
    for (double c : xi) {
        double half = 0.5 * c;
        double s = std::abs(half) < 1e-8 ? 1.0 - half * half / 6.0 : std::sin(half) / half;
        v *= cplx{std::cos(half), -std::sin(half)} * s;
    }
    return v;
}

SingularConvolveResult singular_convolve(double theta, const IndexedCoefficients& b,
                                         const Exponent& p, const Exponent& q) {
    require(b.is_sequence(), "singular_convolve: plain sequences only");
    require(theta > 0.0 && theta <= 1.0, "singular_convolve: theta outside (0, 1]");
    require(!p.is_inf() && !q.is_inf() && p.v > 1.0 && q.v > 1.0,
            "singular_convolve: exponents must lie in (1, infinity)");
    require(std::abs(theta + p.inv() - 1.0 - q.inv()) <= 1e-12,
            "singular_convolve: theta + 1/p = 1 + 1/q violated");
    const long len = static_cast<long>(b.j_count);
    SingularConvolveResult res;
    res.out = b;
    for (long i = 0; i < len; ++i) {
        cplx acc{0.0, 0.0};
        for (long j = 0; j < len; ++j) {
            double m = static_cast<double>(i - j);
            acc += std::pow(1.0 + m * m, -0.5 * theta) * b.value[static_cast<std::size_t>(j)];
        }
        res.out.value[static_cast<std::size_t>(i)] = acc;
    }
    std::vector<double> ob(res.out.value.size()), bb(b.value.size());
    for (std::size_t i = 0; i < ob.size(); ++i) ob[i] = std::abs(res.out.value[i]);
    for (std::size_t i = 0; i < bb.size(); ++i) bb[i] = std::abs(b.value[i]);
    double denom = lp_norm(bb, p);
    res.ratio = denom > 0.0 ? lp_norm(ob, q) / denom : 0.0;
    return res;
}

namespace {

constexpr double kEdge = 1e-12;

// (0, infinity]
bool pos(const Exponent& e) { return e.is_inf() || e.v > 0.0; }
// (1, infinity), both ends genuinely excluded
bool open_1_inf(const Exponent& e) { return !e.is_inf() && e.v > 1.0; }
// (floor, infinity) with the floor closed within tolerance
bool above_floor(const Exponent& e, double floor_v) {
    return !e.is_inf() && e.v >= floor_v - kEdge;
}

double floor_min1(const Exponent& e) { return std::min(1.0, e.v); }

}  // namespace

bool exponents_admissible(TheoremId t, const std::vector<Exponent>& e) {
    switch (t) {
        case TheoremId::thm21:
            if (e.size() == 2)  // {p, q}: step multiplier on W^{p,q}
                return pos(e[0]) && open_1_inf(e[1]);
            if (e.size() == 3) {  // {p, q1, q2}: M^{p,q1} -> M^{p,q2}
                const Exponent &p = e[0], &q1 = e[1], &q2 = e[2];
                if (!pos(p)) return false;
                double fl = floor_min1(p);
                if (!above_floor(q1, fl) || !above_floor(q2, fl)) return false;
                return q1.inv() - q2.inv() >= std::max(p.inv() - 1.0, 0.0) - kEdge;
            }
            fail("exponents_admissible: thm21 takes 2 or 3 exponents");
        case TheoremId::thm22:
            if (e.size() == 2)  // {p, q}: Fourier step multiplier on M^{p,q}
                return open_1_inf(e[0]) && pos(e[1]);
            if (e.size() == 3) {  // {q, p1, p2}: W^{p1,q} -> W^{p2,q}
                const Exponent &q = e[0], &p1 = e[1], &p2 = e[2];
                if (!pos(q)) return false;
                double fl = floor_min1(q);
                if (!above_floor(p1, fl) || !above_floor(p2, fl)) return false;
                return p1.inv() - p2.inv() >= std::max(q.inv() - 1.0, 0.0) - kEdge;
            }
            fail("exponents_admissible: thm22 takes 2 or 3 exponents");
        case TheoremId::thm41:
        case TheoremId::cor45: {
            if (e.size() == 4) {  // {p, p1, p2, q}: W^{p1,q} -> W^{p2,q}
                const Exponent &p = e[0], &p1 = e[1], &p2 = e[2], &q = e[3];
                if (!pos(p) || !pos(p1) || !pos(p2) || !open_1_inf(q)) return false;
                return p2.inv() - p1.inv() <= p.inv() + kEdge;
            }
            if (e.size() == 5) {  // {p, p1, p2, q1, q2}: M^{p1,q1} -> M^{p2,q2}
                const Exponent &p = e[0], &p1 = e[1], &p2 = e[2], &q1 = e[3], &q2 = e[4];
                if (!pos(p) || !pos(p1) || !pos(p2)) return false;
                double fl = floor_min1(t == TheoremId::thm41 ? p2 : p);
                if (!above_floor(q1, fl) || !above_floor(q2, fl)) return false;
                if (p2.inv() - p1.inv() > p.inv() + kEdge) return false;
                return q1.inv() - q2.inv() >= std::max(p2.inv() - 1.0, 0.0) - kEdge;
            }
            fail("exponents_admissible: thm41/cor45 take 4 or 5 exponents");
        }
        case TheoremId::thm42:
        case TheoremId::cor46: {
            if (e.size() == 4) {  // {q, q1, q2, p}: M^{p,q1} -> M^{p,q2}
                const Exponent &q = e[0], &q1 = e[1], &q2 = e[2], &p = e[3];
                if (!pos(q) || !pos(q1) || !pos(q2) || !open_1_inf(p)) return false;
                return q2.inv() - q1.inv() <= q.inv() + kEdge;
            }
            if (e.size() == 5) {  // {q, q1, q2, p1, p2}: W^{p1,q1} -> W^{p2,q2}
                const Exponent &q = e[0], &q1 = e[1], &q2 = e[2], &p1 = e[3], &p2 = e[4];
                if (!pos(q) || !pos(q1) || !pos(q2)) return false;
                double fl = floor_min1(t == TheoremId::thm42 ? q2 : q);
                if (!above_floor(p1, fl) || !above_floor(p2, fl)) return false;
                if (q2.inv() - q1.inv() > q.inv() + kEdge) return false;
                return p1.inv() - p2.inv() >= std::max(q2.inv() - 1.0, 0.0) - kEdge;
            }
            fail("exponents_admissible: thm42/cor46 take 4 or 5 exponents");
        }
    }
    fail("exponents_admissible: unreachable");
}

std::vector<std::vector<Exponent>> admissibility_discrepancy(
    TheoremId thm, TheoremId cor, const std::vector<Exponent>& grid) {
    require((thm == TheoremId::thm41 && cor == TheoremId::cor45) ||
                (thm == TheoremId::thm42 && cor == TheoremId::cor46),
            "admissibility_discrepancy: compare thm41/cor45 or thm42/cor46");
    std::vector<std::vector<Exponent>> zone;
    std::vector<Exponent> tup(5);
    const std::size_t m = grid.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t d = 0; d < m; ++d)
                    for (std::size_t f = 0; f < m; ++f) {
                        tup[0] = grid[a];
                        tup[1] = grid[b];
                        tup[2] = grid[c];
                        tup[3] = grid[d];
                        tup[4] = grid[f];
                        if (exponents_admissible(thm, tup) != exponents_admissible(cor, tup))
                            zone.push_back(tup);
                    }
    return zone;
}

}  // namespace modspace
