#include "modspace/products.hpp"

#include <algorithm>
#include <cmath>

namespace modspace {

namespace {

// plain quadrature-weighted circular convolution of two dense STFT tables
// along one of the two axes; the other axis indexes independent fibers
enum class FiberAxis { frequency, position };

DenseSTFT fiber_convolve(const DenseSTFT& A, const DenseSTFT& B, FiberAxis axis) {
    const GridSpec g = A.grid;
    const int N = g.axis();
    const std::size_t M = g.total();
    const double weight = axis == FiberAxis::frequency ? g.cell_xi() : g.cell_x();
    DenseSTFT out;
    out.grid = g;
    out.v.assign(M * M, cplx{0.0, 0.0});

    // circular difference of flattened multi-indices, per axis; index i holds
    // the value (i - N/2)*step, so the difference value sits at (a - b) + N/2
    auto axis_diff = [&](long a, long b) -> long { return ((a - b + N / 2) % N + N) % N; };
    auto wrap_diff = [&](std::size_t a, std::size_t b) -> std::size_t {
        if (g.d == 1) return static_cast<std::size_t>(axis_diff(static_cast<long>(a), static_cast<long>(b)));
        long a0 = static_cast<long>(a) / N, a1 = static_cast<long>(a) % N;
        long b0 = static_cast<long>(b) / N, b1 = static_cast<long>(b) % N;
        return static_cast<std::size_t>(axis_diff(a0, b0) * N + axis_diff(a1, b1));
    };

    if (axis == FiberAxis::frequency) {
        parallel_for(M, [&](std::size_t pos) {
            const cplx* a = A.v.data() + pos * M;
            const cplx* b = B.v.data() + pos * M;
            cplx* o = out.v.data() + pos * M;
            for (std::size_t k = 0; k < M; ++k) {
                cplx acc{0.0, 0.0};
                for (std::size_t m = 0; m < M; ++m) acc += a[m] * b[wrap_diff(k, m)];
                o[k] = acc * weight;
            }
        });
    } else {
        parallel_for(M, [&](std::size_t x) {
            cplx* o = out.v.data() + x * M;
            for (std::size_t y = 0; y < M; ++y) {
                const cplx* a = A.v.data() + y * M;
                const cplx* b = B.v.data() + wrap_diff(x, y) * M;
                for (std::size_t k = 0; k < M; ++k) o[k] += a[k] * b[k];
            }
            for (std::size_t k = 0; k < M; ++k) o[k] *= weight;
        });
    }
    return out;
}

SampledSignal gaussian_window(const GridSpec& g, double width) {
    std::vector<double> c(static_cast<std::size_t>(g.d), 0.0);
    return sample(g, SignalSpec::gaussian(c, width));
}

// plain N-fold circular convolution through the unitary transform:
// normalized = F^{-1}(prod fhat), plain = (2 pi)^{(N-1)d/2} * normalized
SampledSignal plain_convolution(const std::vector<SampledSignal>& fs) {
    SampledSignal acc = fourier(fs[0], FourierDir::forward);
    for (std::size_t j = 1; j < fs.size(); ++j) {
        SampledSignal fh = fourier(fs[j], FourierDir::forward);
        for (std::size_t i = 0; i < acc.v.size(); ++i) acc.v[i] *= fh.v[i];
    }
    SampledSignal out = fourier(acc, FourierDir::inverse);
    double extra = static_cast<double>(fs.size()) - 1.0;
    scale(out, std::pow(2.0 * pi, 0.5 * extra * fs[0].grid.d));
    return out;
}

}  // namespace

ProductRequest make_product_windows(const GridSpec& g, ProductKind kind, int n_factors,
                                    const std::vector<double>& widths) {
    require(n_factors >= 2 && n_factors <= 4, "make_product_windows: 2 to 4 factors");
    require(g.L <= 16 && g.n <= 32 && g.total() <= 512,
            "make_product_windows: grid too large for cubic fiber cost");
    require(widths.empty() || static_cast<int>(widths.size()) == n_factors,
            "make_product_windows: one width per factor");
    ProductRequest req;
    req.kind = kind;
    for (int j = 0; j < n_factors; ++j) {
        // stay well under the periodization guard: exp(-L^2/(8w^2)) must clear 1e-12
        double w = widths.empty() ? 0.7 + 0.1 * j : widths[static_cast<std::size_t>(j)];
        require(w > 0.1 && w < 0.25 * g.L, "make_product_windows: width outside sane range");
        req.phi.push_back(gaussian_window(g, w));
    }
    req.phi0 = gaussian_window(g, 1.0);

    req.pairing_target =
        kind == ProductKind::multiply
            ? std::pow(2.0 * pi, -0.5 * static_cast<double>(n_factors - 1) * g.d)
            : 1.0;
    SampledSignal probe = req.phi[0];
    if (kind == ProductKind::multiply) {
        for (int j = 1; j < n_factors; ++j) probe = pointwise_mul(probe, req.phi[static_cast<std::size_t>(j)]);
    } else {
        probe = plain_convolution(req.phi);
    }
    cplx raw = l2_inner(probe, req.phi0);
    require(std::abs(raw) >= 1e-8, "make_product_windows: normalization pairing below 1e-8");
    // pairing (probe, c * phi0) = conj(c) (probe, phi0); pick c to hit the target
    cplx c = std::conj(cplx{req.pairing_target, 0.0} / raw);
    for (cplx& v : req.phi0.v) v *= c;
    req.pairing = l2_inner(probe, req.phi0);
    require(std::abs(req.pairing - cplx{req.pairing_target, 0.0}) <= 1e-10,
            "make_product_windows: pairing rescale failed");
    return req;
}

namespace {

SampledSignal product_chain(const std::vector<SampledSignal>& factors, const ProductRequest& req,
                            FiberAxis axis) {
    require(factors.size() == req.phi.size(), "product: factor count mismatch");
    require(factors.size() >= 2, "product: at least two factors");
    const GridSpec g = req.phi0.grid;
    for (const SampledSignal& f : factors) require(f.grid == g, "product: grid mismatch");
    require(std::abs(req.pairing) >= 1e-8, "product: request not certified");

    DenseSTFT acc = stft_dense(factors[0], req.phi[0]);
    for (std::size_t j = 1; j < factors.size(); ++j)
        acc = fiber_convolve(acc, stft_dense(factors[j], req.phi[j]), axis);
    return adjoint_stft(acc, req.phi0);
}

}  // namespace

SampledSignal stft_multiply(const std::vector<SampledSignal>& factors, const ProductRequest& req) {
    require(req.kind == ProductKind::multiply, "stft_multiply: request kind mismatch");
    return product_chain(factors, req, FiberAxis::frequency);
}

SampledSignal stft_convolve(const std::vector<SampledSignal>& factors, const ProductRequest& req) {
    require(req.kind == ProductKind::convolve, "stft_convolve: request kind mismatch");
    return product_chain(factors, req, FiberAxis::position);
}

bool product_exponents_admissible(ProductKind kind, Flavor flavor, const Exponent& p0,
                                  const Exponent& q0, const std::vector<Exponent>& ps,
                                  const std::vector<Exponent>& qs) {
    require(!ps.empty() && ps.size() == qs.size(), "product_exponents_admissible: tuple sizes");
    constexpr double tol = 1e-12;
    double sp = 0.0, sq = 0.0;
    for (const Exponent& p : ps) sp += p.inv();
    for (const Exponent& q : qs) sq += q.inv();
    if (kind == ProductKind::multiply) {
        double r = flavor == Flavor::M ? r_rn(p0, qs) : r_n(qs);
        return p0.inv() <= sp + tol && q0.inv() <= sq - r + tol;
    }
    double r = flavor == Flavor::W ? r_rn(q0, ps) : r_n(ps);
    return p0.inv() <= sp - r + tol && q0.inv() <= sq + tol;
}

double product_weight_constant(ProductKind kind, const GridSpec& g, const Weight& w0,
                               const std::vector<Weight>& ws) {
    const int d = g.d, N = static_cast<int>(ws.size());
    require(N >= 2, "product_weight_constant: at least two factor weights");
    require(w0.dim() == 2 * d, "product_weight_constant: w0 dimension");
    for (const Weight& w : ws) require(w.dim() == 2 * d, "product_weight_constant: factor weight dimension");

    // free variables: the shared coordinate (d axes) plus one d-dim block per
    // factor; each axis sampled uniformly over its physical grid range
    const int vars = d * (N + 1);
    const int samples = d == 1 ? 9 : 5;
    const double xr = 0.5 * g.L, fr = pi * g.n;
    std::vector<int> idx(static_cast<std::size_t>(vars), 0);
    std::vector<double> shared(static_cast<std::size_t>(d)), block(static_cast<std::size_t>(d));
    std::vector<double> arg(static_cast<std::size_t>(2 * d)), sum(static_cast<std::size_t>(d));
    double worst = 0.0;
    bool more = true;
    while (more) {
        auto coord = [&](int v, double range) {
            return range * (2.0 * idx[static_cast<std::size_t>(v)] / (samples - 1) - 1.0);
        };
        // shared axes first, then per-factor blocks
        double prod = 1.0;
        std::fill(sum.begin(), sum.end(), 0.0);
        for (int a = 0; a < d; ++a)
            shared[static_cast<std::size_t>(a)] =
                coord(a, kind == ProductKind::multiply ? xr : fr);
        for (int j = 0; j < N; ++j) {
            for (int a = 0; a < d; ++a) {
                double c = coord(d * (j + 1) + a, kind == ProductKind::multiply ? fr : xr);
                block[static_cast<std::size_t>(a)] = c;
                sum[static_cast<std::size_t>(a)] += c;
            }
            // factor weights always take (position block, frequency block)
            for (int a = 0; a < d; ++a) {
                arg[static_cast<std::size_t>(a)] =
                    kind == ProductKind::multiply ? shared[static_cast<std::size_t>(a)]
                                                  : block[static_cast<std::size_t>(a)];
                arg[static_cast<std::size_t>(d + a)] =
                    kind == ProductKind::multiply ? block[static_cast<std::size_t>(a)]
                                                  : shared[static_cast<std::size_t>(a)];
            }
            prod *= ws[static_cast<std::size_t>(j)].eval(arg.data());
        }
        for (int a = 0; a < d; ++a) {
            arg[static_cast<std::size_t>(a)] = kind == ProductKind::multiply
                                                   ? shared[static_cast<std::size_t>(a)]
                                                   : sum[static_cast<std::size_t>(a)];
            arg[static_cast<std::size_t>(d + a)] = kind == ProductKind::multiply
                                                       ? sum[static_cast<std::size_t>(a)]
                                                       : shared[static_cast<std::size_t>(a)];
        }
        worst = std::max(worst, w0.eval(arg.data()) / prod);
        more = false;
        for (int v = 0; v < vars; ++v) {
            if (++idx[static_cast<std::size_t>(v)] < samples) {
                more = true;
                break;
            }
            idx[static_cast<std::size_t>(v)] = 0;
        }
    }
    return worst;
}

ProductNormReport product_norm_check(const std::vector<SampledSignal>& factors,
                                     const std::vector<Exponent>& ps,
                                     const std::vector<Exponent>& qs, const Exponent& p0,
                                     const Exponent& q0, Flavor flavor,
                                     const ProductRequest& req, const std::vector<Weight>& ws,
                                     const Weight* w0) {
    require(factors.size() == ps.size() && ps.size() == qs.size(),
            "product_norm_check: tuple sizes");
    require(ws.empty() || (ws.size() == factors.size() && w0 != nullptr),
            "product_norm_check: one weight per factor plus w0, or none");
    require(product_exponents_admissible(req.kind, flavor, p0, q0, ps, qs),
            "product_norm_check: inadmissible exponent regime");

    ProductNormReport rep;
    rep.admissible = true;
    SampledSignal prod = req.kind == ProductKind::multiply ? stft_multiply(factors, req)
                                                           : stft_convolve(factors, req);

    WindowPair pair = make_window_pair(req.phi0.grid, 2.0);
    ModNormRequest out_req;
    out_req.flavor = flavor;
    out_req.p = p0;
    out_req.q = q0;
    if (w0 != nullptr) out_req.w = *w0;
    rep.lhs = mod_norm(prod, pair, out_req);

    rep.rhs_product = 1.0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        ModNormRequest r;
        r.flavor = flavor;
        r.p = ps[j];
        r.q = qs[j];
        if (!ws.empty()) r.w = ws[j];
        rep.rhs_product *= mod_norm(factors[j], pair, r);
    }
    if (!ws.empty()) {
        rep.weight_constant = product_weight_constant(req.kind, req.phi0.grid, *w0, ws);
        rep.rhs_product *= rep.weight_constant;
    }
    rep.ratio = rep.rhs_product > 0.0 ? rep.lhs / rep.rhs_product : 0.0;
    return rep;
}

}  // namespace modspace
