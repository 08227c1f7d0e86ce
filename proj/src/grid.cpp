#include "modspace/grid.hpp"

#include <algorithm>
#include <cmath>

#include "modspace/fft.hpp"

namespace modspace {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::vector<double> pad_dim(std::vector<double> v, int d, const char* what) {
    if (v.empty()) v.assign(static_cast<std::size_t>(d), 0.0);
    require(static_cast<int>(v.size()) == d, std::string(what) + ": dimension mismatch");
    return v;
}

// displacement wrapped to [-L/2, L/2)
double wrap_disp(double u, int L) {
    double w = std::fmod(u + 0.5 * L, static_cast<double>(L));
    if (w < 0) w += L;
    return w - 0.5 * L;
}

}  // namespace

GridSpec make_grid(int d, int L, int n) {
    require(d == 1 || d == 2, "make_grid: d must be 1 or 2");
    require(L >= 2 && L % 2 == 0, "make_grid: L must be a positive even integer");
    require(power_of_two(n) && n >= 2, "make_grid: n must be a power of two, n >= 2");
    // keep dense d=2 objects addressable
    require(d == 1 || L * n <= 4096, "make_grid: d=2 axis too large");
    return GridSpec{d, L, n};
}

SampledSignal zero_signal(const GridSpec& g) {
    return SampledSignal{g, std::vector<cplx>(g.total(), cplx{0.0, 0.0})};
}

SignalSpec SignalSpec::constant(cplx value) {
    SignalSpec s;
    s.kind = Kind::constant;
    s.amplitude = value;
    return s;
}

SignalSpec SignalSpec::gaussian(std::vector<double> center, double width,
                                std::vector<double> modulation, cplx amplitude) {
    SignalSpec s;
    s.kind = Kind::gaussian;
    s.center = std::move(center);
    s.width = width;
    s.modulation = std::move(modulation);
    s.amplitude = amplitude;
    return s;
}

SignalSpec SignalSpec::bump(std::vector<double> center, double radius, double sigma,
                            std::vector<double> modulation, cplx amplitude) {
    SignalSpec s;
    s.kind = Kind::gevrey_bump;
    s.center = std::move(center);
    s.radius = radius;
    s.sigma = sigma;
    s.modulation = std::move(modulation);
    s.amplitude = amplitude;
    return s;
}

SignalSpec SignalSpec::bandlimited_noise(std::uint64_t seed, double xi_max) {
    SignalSpec s;
    s.kind = Kind::random_bandlimited;
    s.seed = seed;
    s.xi_max = xi_max;
    return s;
}

namespace {

// Periodized Gaussian along one axis: value and the aliasing contribution
// (all terms with m != 0).  Terms are added until they fall below 1e-18 of
// the peak; the caller rejects descriptors whose alias ratio exceeds 1e-12.
void gaussian_axis(double u, double width, double L, double& value, double& alias) {
    value = 0.0;
    alias = 0.0;
    for (int m = 0;; ++m) {
        double t = std::exp(-sqr(u + m * L) / (2.0 * sqr(width)));
        if (m > 0) {
            t += std::exp(-sqr(u - m * L) / (2.0 * sqr(width)));
            alias += t;
        }
        value += t;
        if (m > 0 && t < 1e-18) break;
    }
}

SampledSignal sample_gaussian(const GridSpec& g, const SignalSpec& spec) {
    require(spec.width > 0.0, "sample: gaussian width must be positive");
    auto center = pad_dim(spec.center, g.d, "sample: center");
    auto mod = pad_dim(spec.modulation, g.d, "sample: modulation");

    // spectral-side aliasing: the Gaussian band edge must clear Nyquist
    double spectral_alias = std::exp(-sqr(g.nyquist() * spec.width) / 2.0);
    require(spectral_alias <= 1e-12,
            "sample: gaussian too narrow for the sample rate (spectral aliasing above 1e-12)");

    int N = g.axis();
    SampledSignal out = zero_signal(g);
    double worst_alias = 0.0, peak = 0.0;
    // separable: precompute per-axis profiles
    std::vector<std::vector<double>> prof(static_cast<std::size_t>(g.d)),
        prof_alias(static_cast<std::size_t>(g.d));
    for (int a = 0; a < g.d; ++a) {
        prof[a].resize(static_cast<std::size_t>(N));
        prof_alias[a].resize(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i) {
            gaussian_axis(g.x(i) - center[a], spec.width, g.L, prof[a][i], prof_alias[a][i]);
        }
    }
    if (g.d == 1) {
        for (int i = 0; i < N; ++i) {
            double ph = mod[0] * g.x(i);
            out.at(i) = spec.amplitude * prof[0][i] * cplx{std::cos(ph), std::sin(ph)};
            worst_alias = std::max(worst_alias, prof_alias[0][i]);
            peak = std::max(peak, prof[0][i]);
        }
    } else {
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N; ++j) {
                double ph = mod[0] * g.x(i) + mod[1] * g.x(j);
                double mag = prof[0][i] * prof[1][j];
                // alias of a product: cross terms bounded by sum of axis ratios
                double al = prof_alias[0][i] * prof[1][j] + prof[0][i] * prof_alias[1][j];
                out.at(i, j) = spec.amplitude * mag * cplx{std::cos(ph), std::sin(ph)};
                worst_alias = std::max(worst_alias, al);
                peak = std::max(peak, mag);
            }
        }
    }
    require(worst_alias <= 1e-12 * std::max(peak, 1e-300),
            "sample: gaussian too wide for the period (aliasing above 1e-12)");
    return out;
}

SampledSignal sample_bump(const GridSpec& g, const SignalSpec& spec) {
    require(spec.radius > 0.0, "sample: bump radius must be positive");
    require(2.0 * spec.radius <= g.L, "sample: bump support exceeds the period");
    require(spec.sigma > 1.0, "sample: bump sigma must exceed 1");
    auto center = pad_dim(spec.center, g.d, "sample: center");
    auto mod = pad_dim(spec.modulation, g.d, "sample: modulation");

    // per-axis profile: 1 on |u| <= R/2, Gevrey ramp down to 0 at |u| = R
    auto profile = [&](double u) {
        return gevrey_ramp(2.0 * (spec.radius - std::abs(u)) / spec.radius, spec.sigma);
    };
    int N = g.axis();
    SampledSignal out = zero_signal(g);
    if (g.d == 1) {
        for (int i = 0; i < N; ++i) {
            double u = wrap_disp(g.x(i) - center[0], g.L);
            double ph = mod[0] * g.x(i);
            out.at(i) = spec.amplitude * profile(u) * cplx{std::cos(ph), std::sin(ph)};
        }
    } else {
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N; ++j) {
                double u0 = wrap_disp(g.x(i) - center[0], g.L);
                double u1 = wrap_disp(g.x(j) - center[1], g.L);
                double ph = mod[0] * g.x(i) + mod[1] * g.x(j);
                out.at(i, j) =
                    spec.amplitude * profile(u0) * profile(u1) * cplx{std::cos(ph), std::sin(ph)};
            }
        }
    }
    return out;
}

// Band-limited noise with frequency support |xi|_inf <= xi_max.  Coefficients
// are seeded per integer mode, so the same (seed, xi_max, L) names the same
// continuum trigonometric polynomial on every refinement n.
SampledSignal sample_noise(const GridSpec& g, const SignalSpec& spec) {
    require(spec.xi_max > 0.0 && spec.xi_max < g.nyquist(),
            "sample: noise band must sit strictly inside the Nyquist window");
    int C = static_cast<int>(std::floor(spec.xi_max * g.L / (2.0 * pi)));
    int N = g.axis();
    SampledSignal out = zero_signal(g);
    if (g.d == 1) {
        for (int c = -C; c <= C; ++c) {
            SplitMix64 rng(derive_seed(spec.seed, static_cast<std::uint64_t>(c + C)));
            cplx z = rng.complex_normal();
            for (int i = 0; i < N; ++i) {
                double ph = 2.0 * pi * c * g.x(i) / g.L;
                out.at(i) += z * cplx{std::cos(ph), std::sin(ph)};
            }
        }
    } else {
        int M = 2 * C + 1;
        for (int c0 = -C; c0 <= C; ++c0) {
            for (int c1 = -C; c1 <= C; ++c1) {
                SplitMix64 rng(derive_seed(
                    spec.seed, static_cast<std::uint64_t>((c0 + C) * M + (c1 + C))));
                cplx z = rng.complex_normal();
                // separable phases keep this O(N^2) per mode, acceptable at
                // the coarse d=2 grids the cost caps allow
                for (int i = 0; i < N; ++i) {
                    double ph0 = 2.0 * pi * c0 * g.x(i) / g.L;
                    cplx e0 = z * cplx{std::cos(ph0), std::sin(ph0)};
                    for (int j = 0; j < N; ++j) {
                        double ph1 = 2.0 * pi * c1 * g.x(j) / g.L;
                        out.at(i, j) += e0 * cplx{std::cos(ph1), std::sin(ph1)};
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

SampledSignal sample(const GridSpec& g, const SignalSpec& spec) {
    switch (spec.kind) {
        case SignalSpec::Kind::zero:
            return zero_signal(g);
        case SignalSpec::Kind::constant: {
            SampledSignal out = zero_signal(g);
            std::fill(out.v.begin(), out.v.end(), spec.amplitude);
            return out;
        }
        case SignalSpec::Kind::gaussian:
            return sample_gaussian(g, spec);
        case SignalSpec::Kind::gevrey_bump:
            return sample_bump(g, spec);
        case SignalSpec::Kind::random_bandlimited:
            return sample_noise(g, spec);
    }
    fail("sample: unknown descriptor kind");
}

SampledSignal fourier(const SampledSignal& f, FourierDir dir) {
    const GridSpec& g = f.grid;
    SampledSignal out = f;
    std::vector<int> dims(static_cast<std::size_t>(g.d), g.axis());
    double scl;
    if (dir == FourierDir::forward) {
        centered_dft(out.v, dims, -1);
        scl = std::pow(2.0 * pi, -0.5 * g.d) * g.cell_x();
    } else {
        centered_dft(out.v, dims, +1);
        scl = std::pow(2.0 * pi, -0.5 * g.d) * g.cell_xi();
    }
    scale(out, scl);
    return out;
}

cplx l2_inner(const SampledSignal& f, const SampledSignal& g) {
    require(f.grid == g.grid, "l2_inner: grid mismatch");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < f.v.size(); ++i) acc += f.v[i] * std::conj(g.v[i]);
    return acc * f.grid.cell_x();
}

double l2_norm(const SampledSignal& f) {
    double acc = 0.0;
    for (const cplx& z : f.v) acc += std::norm(z);
    return std::sqrt(acc * f.grid.cell_x());
}

SampledSignal pointwise_mul(const SampledSignal& f, const SampledSignal& g) {
    require(f.grid == g.grid, "pointwise_mul: grid mismatch");
    SampledSignal out = f;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] *= g.v[i];
    return out;
}

SampledSignal conjugate(const SampledSignal& f) {
    SampledSignal out = f;
    for (cplx& z : out.v) z = std::conj(z);
    return out;
}

void scale(SampledSignal& f, cplx c) {
    for (cplx& z : f.v) z *= c;
}

void accumulate(SampledSignal& into, const SampledSignal& from, cplx c) {
    require(into.grid == from.grid, "accumulate: grid mismatch");
    for (std::size_t i = 0; i < into.v.size(); ++i) into.v[i] += c * from.v[i];
}

SampledSignal translate(const SampledSignal& f, const std::vector<int>& steps) {
    const GridSpec& g = f.grid;
    require(static_cast<int>(steps.size()) == g.d, "translate: dimension mismatch");
    int N = g.axis();
    auto wrap = [N](int i) { return ((i % N) + N) % N; };
    SampledSignal out = zero_signal(g);
    if (g.d == 1) {
        for (int i = 0; i < N; ++i) out.at(i) = f.at(wrap(i - steps[0]));
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) out.at(i, j) = f.at(wrap(i - steps[0]), wrap(j - steps[1]));
    }
    return out;
}

SampledSignal modulate(const SampledSignal& f, const std::vector<int>& freq_index) {
    const GridSpec& g = f.grid;
    require(static_cast<int>(freq_index.size()) == g.d, "modulate: dimension mismatch");
    int N = g.axis();
    SampledSignal out = zero_signal(g);
    if (g.d == 1) {
        for (int i = 0; i < N; ++i) {
            double ph = freq_index[0] * g.dxi() * g.x(i);
            out.at(i) = f.at(i) * cplx{std::cos(ph), std::sin(ph)};
        }
    } else {
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N; ++j) {
                double ph = g.dxi() * (freq_index[0] * g.x(i) + freq_index[1] * g.x(j));
                out.at(i, j) = f.at(i, j) * cplx{std::cos(ph), std::sin(ph)};
            }
        }
    }
    return out;
}

double max_abs(const SampledSignal& f) {
    double m = 0.0;
    for (const cplx& z : f.v) m = std::max(m, std::abs(z));
    return m;
}

double rel_l2_error(const SampledSignal& got, const SampledSignal& want) {
    require(got.grid == want.grid, "rel_l2_error: grid mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.v.size(); ++i) {
        num += std::norm(got.v[i] - want.v[i]);
        den += std::norm(want.v[i]);
    }
    return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

}  // namespace modspace
