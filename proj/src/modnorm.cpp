#include "modspace/modnorm.hpp"

#include <algorithm>
#include <cmath>

namespace modspace {

namespace {

// flavor-to-seqspace mapping: in seqspace convention p always rides the j
// (position) axis and q the k (frequency) axis, so
//   M^{p,q} = quasi_norm(p, q, plain)   (inner ell^p over positions)
//   W^{p,q} = quasi_norm(p, q, star)    (inner ell^q over frequencies)
struct AxisExponents {
    Exponent on_positions;
    Exponent on_freqs;
    NormOrder order;
};

AxisExponents axis_exponents(Flavor flavor, const Exponent& p, const Exponent& q) {
    return {p, q, flavor == Flavor::M ? NormOrder::plain : NormOrder::star};
}

}  // namespace

double phase_riemann_norm(const DenseSTFT& F, const Exponent& p, const Exponent& q,
                          NormOrder order, const Weight* w) {
    const GridSpec g = F.grid;
    const std::size_t M = F.points();
    if (w != nullptr) require(w->dim() == 2 * g.d, "phase_riemann_norm: weight dimension");

    IndexedCoefficients t;
    t.j_count = M;
    t.k_count = M;
    t.dj = g.d;
    t.dk = g.d;
    t.value.resize(M * M);
    t.j_coord.resize(M * g.d);
    t.k_coord.resize(M * g.d);
    const int N = g.axis();
    for (std::size_t i = 0; i < M; ++i) {
        if (g.d == 1) {
            t.j_coord[i] = g.x(static_cast<int>(i));
            t.k_coord[i] = g.xi(static_cast<int>(i));
        } else {
            t.j_coord[i * 2] = g.x(static_cast<int>(i) / N);
            t.j_coord[i * 2 + 1] = g.x(static_cast<int>(i) % N);
            t.k_coord[i * 2] = g.xi(static_cast<int>(i) / N);
            t.k_coord[i * 2 + 1] = g.xi(static_cast<int>(i) % N);
        }
    }
    // fold the quadrature measure into the values: the inner/outer norms are
    // homogeneous, so dx^{d/p} on the position axis and dxi^{d/q} on the
    // frequency axis turn counting norms into Riemann ones (exponent infinity
    // contributes no measure, matching the supremum)
    const double scale = std::pow(g.cell_x(), g.d * p.inv()) * std::pow(g.cell_xi(), g.d * q.inv());
    for (std::size_t i = 0; i < M * M; ++i) t.value[i] = F.v[i] * scale;
    return quasi_norm(t, p, q, order, w);
}

double mod_norm(const SampledSignal& f, const WindowPair& win, const ModNormRequest& req) {
    require(f.grid == win.grid, "mod_norm: signal and window grids differ");
    if (req.w) require(req.w->dim() == 2 * f.grid.d, "mod_norm: weight dimension");
    const Weight* w = req.w ? &*req.w : nullptr;
    const AxisExponents ax = axis_exponents(req.flavor, req.p, req.q);

    if (req.mode == NormMode::lattice) {
        GaborCoefficients c = analyze(f, win.phi);
        return quasi_norm(c.table, ax.on_positions, ax.on_freqs, ax.order, w);
    }
    DenseSTFT F = stft_dense(f, win.phi);
    return phase_riemann_norm(F, ax.on_positions, ax.on_freqs, ax.order, w);
}

double wiener_norm(const DenseSTFT& F, const Exponent& r, const Exponent& p,
                   const Exponent& q, const Weight& w, NormOrder order) {
    const GridSpec g = F.grid;
    require(g.n >= 4, "wiener_norm: unit cubes need n >= 4");
    require(w.dim() == 2 * g.d, "wiener_norm: weight dimension");
    const int N = g.axis();
    const std::size_t M = F.points();

    // cube lattices: position cubes are the L integer cells of the period;
    // frequency cubes are every unit interval meeting [-pi n, pi n)
    const long f_lo = static_cast<long>(std::floor(-pi * g.n));
    const long f_hi = static_cast<long>(std::ceil(pi * g.n)) - 1;
    const long f_axis = f_hi - f_lo + 1;
    const long p_axis = g.L;
    const std::size_t pc = g.d == 1 ? p_axis : static_cast<std::size_t>(p_axis) * p_axis;
    const std::size_t fc = g.d == 1 ? static_cast<std::size_t>(f_axis)
                                    : static_cast<std::size_t>(f_axis) * f_axis;

    // per-axis overlap of the frequency cell [xi_k, xi_k + dxi) with the unit
    // intervals it meets: list of (cube offset from f_lo, length)
    struct Overlap {
        long cube;
        double len;
    };
    std::vector<std::vector<Overlap>> fparts(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) {
        double a = g.xi(k), bnd = a + g.cell_xi();
        for (long m = static_cast<long>(std::floor(a)); m < bnd; ++m) {
            double len = std::min(bnd, static_cast<double>(m + 1)) - std::max(a, static_cast<double>(m));
            if (len > 0.0) fparts[static_cast<std::size_t>(k)].push_back({m - f_lo, len});
        }
    }
    // position cells never straddle: dx divides 1
    std::vector<long> pcube(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        pcube[static_cast<std::size_t>(i)] = static_cast<long>(std::floor(g.x(i))) + g.L / 2;

    const bool sup_mode = r.is_inf();
    std::vector<double> acc(pc * fc, 0.0);  // r-mass or running sup
    std::vector<double> vmax(pc * fc, 0.0);

    auto deposit = [&](std::size_t cube, double v, double measure) {
        if (sup_mode) {
            acc[cube] = std::max(acc[cube], v);
            return;
        }
        vmax[cube] = std::max(vmax[cube], v);
        acc[cube] += measure * std::pow(v, r.v);  // rescaled below by vmax factoring
    };

    // two passes when r is finite so the power is max-factored per cube:
    // first find cube sups, then accumulate (v/vmax)^r
    std::vector<double> coord(static_cast<std::size_t>(2 * g.d));
    if (!sup_mode) {
        for (std::size_t a = 0; a < M; ++a) {
            for (std::size_t b = 0; b < M; ++b) {
                double v = std::abs(F.at(a, b));
                if (v == 0.0) continue;
                if (g.d == 1) {
                    coord[0] = g.x(static_cast<int>(a));
                    coord[1] = g.xi(static_cast<int>(b));
                    v *= w.eval(coord.data());
                    std::size_t jc = static_cast<std::size_t>(pcube[a]);
                    for (const Overlap& o : fparts[b])
                        vmax[jc * fc + static_cast<std::size_t>(o.cube)] =
                            std::max(vmax[jc * fc + static_cast<std::size_t>(o.cube)], v);
                } else {
                    int a0 = static_cast<int>(a) / N, a1 = static_cast<int>(a) % N;
                    int b0 = static_cast<int>(b) / N, b1 = static_cast<int>(b) % N;
                    coord[0] = g.x(a0);
                    coord[1] = g.x(a1);
                    coord[2] = g.xi(b0);
                    coord[3] = g.xi(b1);
                    v *= w.eval(coord.data());
                    std::size_t jc = static_cast<std::size_t>(pcube[static_cast<std::size_t>(a0)]) *
                                         p_axis +
                                     static_cast<std::size_t>(pcube[static_cast<std::size_t>(a1)]);
                    for (const Overlap& o0 : fparts[static_cast<std::size_t>(b0)])
                        for (const Overlap& o1 : fparts[static_cast<std::size_t>(b1)]) {
                            std::size_t kc = static_cast<std::size_t>(o0.cube) * f_axis +
                                             static_cast<std::size_t>(o1.cube);
                            vmax[jc * fc + kc] = std::max(vmax[jc * fc + kc], v);
                        }
                }
            }
        }
    }
    const double dxd = std::pow(g.cell_x(), g.d);
    for (std::size_t a = 0; a < M; ++a) {
        for (std::size_t b = 0; b < M; ++b) {
            double v = std::abs(F.at(a, b));
            if (v == 0.0) continue;
            if (g.d == 1) {
                coord[0] = g.x(static_cast<int>(a));
                coord[1] = g.xi(static_cast<int>(b));
                v *= w.eval(coord.data());
                std::size_t jc = static_cast<std::size_t>(pcube[a]);
                for (const Overlap& o : fparts[b]) {
                    std::size_t cube = jc * fc + static_cast<std::size_t>(o.cube);
                    double vv = sup_mode ? v : v / vmax[cube];
                    deposit(cube, vv, dxd * o.len);
                }
            } else {
                int a0 = static_cast<int>(a) / N, a1 = static_cast<int>(a) % N;
                int b0 = static_cast<int>(b) / N, b1 = static_cast<int>(b) % N;
                coord[0] = g.x(a0);
                coord[1] = g.x(a1);
                coord[2] = g.xi(b0);
                coord[3] = g.xi(b1);
                v *= w.eval(coord.data());
                std::size_t jc = static_cast<std::size_t>(pcube[static_cast<std::size_t>(a0)]) *
                                     p_axis +
                                 static_cast<std::size_t>(pcube[static_cast<std::size_t>(a1)]);
                for (const Overlap& o0 : fparts[static_cast<std::size_t>(b0)])
                    for (const Overlap& o1 : fparts[static_cast<std::size_t>(b1)]) {
                        std::size_t cube = jc * fc + static_cast<std::size_t>(o0.cube) * f_axis +
                                           static_cast<std::size_t>(o1.cube);
                        double vv = sup_mode ? v : v / vmax[cube];
                        deposit(cube, vv, dxd * o0.len * o1.len);
                    }
            }
        }
    }

    IndexedCoefficients t;
    t.j_count = pc;
    t.k_count = fc;
    t.dj = g.d;
    t.dk = g.d;
    t.value.resize(pc * fc);
    t.j_coord.resize(pc * g.d);
    t.k_coord.resize(fc * g.d);
    for (std::size_t j = 0; j < pc; ++j) {
        if (g.d == 1) {
            t.j_coord[j] = static_cast<double>(static_cast<long>(j) - g.L / 2);
        } else {
            t.j_coord[j * 2] = static_cast<double>(static_cast<long>(j) / p_axis - g.L / 2);
            t.j_coord[j * 2 + 1] = static_cast<double>(static_cast<long>(j) % p_axis - g.L / 2);
        }
    }
    for (std::size_t k = 0; k < fc; ++k) {
        if (g.d == 1) {
            t.k_coord[k] = static_cast<double>(static_cast<long>(k) + f_lo);
        } else {
            t.k_coord[k * 2] = static_cast<double>(static_cast<long>(k) / f_axis + f_lo);
            t.k_coord[k * 2 + 1] = static_cast<double>(static_cast<long>(k) % f_axis + f_lo);
        }
    }
    for (std::size_t c = 0; c < pc * fc; ++c) {
        double a = acc[c];
        t.value[c] = sup_mode ? a : (a > 0.0 ? vmax[c] * std::pow(a, r.inv()) : 0.0);
    }
    return quasi_norm(t, p, q, order, nullptr);
}

double wiener_norm_1d(const SampledSignal& f, const Exponent& r, const Exponent& p,
                      const Weight* w) {
    const GridSpec g = f.grid;
    require(g.d == 1, "wiener_norm_1d: one-dimensional signals only");
    if (w != nullptr) require(w->dim() == 1, "wiener_norm_1d: weight dimension");
    const int N = g.axis();

    std::vector<double> locals(static_cast<std::size_t>(g.L), 0.0);
    std::vector<double> sups(static_cast<std::size_t>(g.L), 0.0);
    for (int i = 0; i < N; ++i) {
        double x = g.x(i);
        double v = std::abs(f.at(i));
        if (w != nullptr) v *= w->eval(&x);
        std::size_t cube = static_cast<std::size_t>(i / g.n);  // n cells per unit interval
        sups[cube] = std::max(sups[cube], v);
    }
    if (r.is_inf()) {
        locals = sups;
    } else {
        for (int i = 0; i < N; ++i) {
            double x = g.x(i);
            double v = std::abs(f.at(i));
            if (w != nullptr) v *= w->eval(&x);
            std::size_t cube = static_cast<std::size_t>(i / g.n);
            if (sups[cube] > 0.0) locals[cube] += g.cell_x() * std::pow(v / sups[cube], r.v);
        }
        for (std::size_t c = 0; c < locals.size(); ++c)
            locals[c] = locals[c] > 0.0 ? sups[c] * std::pow(locals[c], r.inv()) : 0.0;
    }
    return lp_norm(locals, p);
}

EmbeddingReport embedding_check(const SampledSignal& f, const WindowPair& win,
                                std::pair<Exponent, Exponent> pq1,
                                std::pair<Exponent, Exponent> pq2, const Weight* w,
                                Flavor flavor) {
    require(pq1.first.v <= pq2.first.v && pq1.second.v <= pq2.second.v,
            "embedding_check: exponent pairs must be ordered");
    ModNormRequest req;
    req.flavor = flavor;
    req.mode = NormMode::lattice;
    if (w != nullptr) req.w = *w;
    EmbeddingReport rep;
    req.p = pq1.first;
    req.q = pq1.second;
    rep.n1 = mod_norm(f, win, req);
    req.p = pq2.first;
    req.q = pq2.second;
    rep.n2 = mod_norm(f, win, req);
    rep.consistent = rep.n2 <= rep.n1 * (1.0 + 1e-12);
    return rep;
}

}  // namespace modspace
