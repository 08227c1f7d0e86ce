#include "modspace/windows.hpp"

#include <algorithm>
#include <cmath>

namespace modspace {

Ramp make_ramp(double sigma) {
    require(sigma > 1.0, "make_ramp: sigma must exceed 1");
    return Ramp{sigma};
}

double phi_profile(double x, double sigma) {
    return gevrey_ramp(2.0 * (0.75 - std::abs(x)), sigma);
}

double psi_profile(double x, double sigma) {
    return gevrey_ramp(4.0 * (1.0 - std::abs(x)), sigma);
}

namespace {

// sample a separable profile on the grid, displacement wrapped to the period
SampledSignal sample_profile(const GridSpec& g, double sigma, double (*profile)(double, double)) {
    int N = g.axis();
    SampledSignal out = zero_signal(g);
    std::vector<double> axis(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) axis[static_cast<std::size_t>(i)] = profile(g.x(i), sigma);
    if (g.d == 1) {
        for (int i = 0; i < N; ++i) out.at(i) = axis[static_cast<std::size_t>(i)];
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                out.at(i, j) = axis[static_cast<std::size_t>(i)] * axis[static_cast<std::size_t>(j)];
    }
    return out;
}

}  // namespace

WindowPair make_window_pair(const GridSpec& g, double sigma) {
    require(sigma > 1.0, "make_window_pair: sigma must exceed 1");
    require(g.n >= 8, "make_window_pair: n >= 8 required to resolve the transition zones");
    WindowPair wp;
    wp.grid = g;
    wp.sigma = sigma;
    wp.phi = sample_profile(g, sigma, &phi_profile);
    wp.psi = sample_profile(g, sigma, &psi_profile);
    return wp;
}

double partition_unity_error(const WindowPair& wp) {
    const GridSpec& g = wp.grid;
    int N = g.axis();
    // per-axis partition: sum over integer shifts of the phi profile
    std::vector<double> sum1(static_cast<std::size_t>(N), 0.0);
    for (int i = 0; i < N; ++i) {
        for (int j = -g.L / 2; j < g.L / 2; ++j) {
            // phi is supported in [-3/4, 3/4]; wrap the displacement
            double u = g.x(i) - j;
            u -= g.L * std::round(u / g.L);
            sum1[static_cast<std::size_t>(i)] += phi_profile(u, wp.sigma);
        }
    }
    double err = 0.0;
    if (g.d == 1) {
        for (double s : sum1) err = std::max(err, std::abs(s - 1.0));
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                err = std::max(err, std::abs(sum1[static_cast<std::size_t>(i)] *
                                                 sum1[static_cast<std::size_t>(j)] -
                                             1.0));
    }
    return err;
}

SampledSignal spectral_derivative(const SampledSignal& f, const std::vector<int>& alpha) {
    const GridSpec& g = f.grid;
    require(static_cast<int>(alpha.size()) == g.d, "spectral_derivative: order dim mismatch");
    for (int a : alpha) require(a >= 0, "spectral_derivative: negative order");
    SampledSignal spec = fourier(f, FourierDir::forward);
    int N = g.axis();
    if (g.d == 1) {
        for (int k = 0; k < N; ++k) {
            cplx m = std::pow(cplx{0.0, g.xi(k)}, alpha[0]);
            spec.at(k) *= m;
        }
    } else {
        for (int k0 = 0; k0 < N; ++k0) {
            cplx m0 = std::pow(cplx{0.0, g.xi(k0)}, alpha[0]);
            for (int k1 = 0; k1 < N; ++k1) {
                spec.at(k0, k1) *= m0 * std::pow(cplx{0.0, g.xi(k1)}, alpha[1]);
            }
        }
    }
    return fourier(spec, FourierDir::inverse);
}

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

GevreyReport gevrey_seminorm(const SampledSignal& f, double h, double sigma, int max_order) {
    require(h > 0.0, "gevrey_seminorm: h must be positive");
    require(sigma >= 1.0, "gevrey_seminorm: sigma must be >= 1");
    require(max_order >= 0 && max_order <= 16, "gevrey_seminorm: order out of range");
    const GridSpec& g = f.grid;

    SampledSignal spec = fourier(f, FourierDir::forward);
    double spec_mass = 0.0;  // sum |f^| * cell, bounds every derivative sup
    for (const cplx& z : spec.v) spec_mass += std::abs(z);
    spec_mass *= g.cell_xi() * std::pow(2.0 * pi, -0.5 * g.d);

    GevreyReport rep;
    rep.order_sup.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
    for (int total = 0; total <= max_order; ++total) {
        double sup = 0.0, denom_best = 0.0;
        auto consider = [&](const std::vector<int>& alpha) {
            double s = max_abs(spectral_derivative(f, alpha));
            sup = std::max(sup, s);
            double fac = 1.0;
            for (int a : alpha) fac *= factorial(a);
            double denom = std::pow(h, total) * std::pow(fac, sigma);
            denom_best = std::max(denom_best, s / denom);
        };
        if (g.d == 1) {
            consider({total});
        } else {
            for (int a = 0; a <= total; ++a) consider({a, total - a});
        }
        rep.order_sup[static_cast<std::size_t>(total)] = sup;
        rep.value = std::max(rep.value, denom_best);
        // noise estimate: spectrum entries at the rounding floor, amplified by
        // |xi|^k across the whole band
        double noise = spec_mass * std::pow(g.nyquist(), total) * 0x1.0p-48;
        if (rep.suspect_order < 0 && total > 0 && sup <= noise) rep.suspect_order = total;
    }
    return rep;
}

DecayFit fourier_decay_fit(const SampledSignal& f, double sigma) {
    require(sigma >= 1.0, "fourier_decay_fit: sigma must be >= 1");
    const GridSpec& g = f.grid;
    SampledSignal spec = fourier(f, FourierDir::forward);
    double lo = g.nyquist() / 8.0, hi = g.nyquist() / 2.0;

    // least squares of y = c - r*u with u = |xi|^{1/sigma}
    double su = 0.0, sy = 0.0, suu = 0.0, suy = 0.0;
    int m = 0;
    auto add_point = [&](double xi_abs, double mag) {
        if (xi_abs < lo || xi_abs > hi || mag < 1e-290) return;
        double u = std::pow(xi_abs, 1.0 / sigma);
        double y = std::log(mag);
        su += u;
        sy += y;
        suu += u * u;
        suy += u * y;
        ++m;
    };
    int N = g.axis();
    if (g.d == 1) {
        for (int k = 0; k < N; ++k) add_point(std::abs(g.xi(k)), std::abs(spec.at(k)));
    } else {
        for (int k0 = 0; k0 < N; ++k0)
            for (int k1 = 0; k1 < N; ++k1)
                add_point(std::hypot(g.xi(k0), g.xi(k1)), std::abs(spec.at(k0, k1)));
    }
    require(m >= 8, "fourier_decay_fit: spectrum vanishes on the fit band");
    double denom = m * suu - su * su;
    DecayFit fit;
    fit.rate = -(m * suy - su * sy) / denom;
    fit.intercept = (sy * suu - su * suy) / denom;
    fit.points = m;
    return fit;
}

}  // namespace modspace
