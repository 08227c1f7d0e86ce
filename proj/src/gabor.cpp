#include "modspace/gabor.hpp"

#include <algorithm>
#include <cmath>

#include "modspace/fft.hpp"

namespace modspace {

namespace {

int wrap_idx(int i, int N) { return ((i % N) + N) % N; }

// warm the FFTW plan cache for the dims used inside parallel loops, so the
// planner mutex never serializes the workers
void warm_plan(const std::vector<int>& dims) {
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    std::vector<cplx> scratch(total, cplx{0.0, 0.0});
    centered_dft(scratch, dims, -1);
    centered_dft(scratch, dims, +1);
}

}  // namespace

DenseSTFT stft_dense(const SampledSignal& f, const SampledSignal& phi) {
    require(f.grid == phi.grid, "stft_dense: grid mismatch");
    const GridSpec g = f.grid;
    const int N = g.axis();
    const std::size_t M = g.total();
    DenseSTFT out{g, std::vector<cplx>(M * M)};
    const double scl = std::pow(2.0 * pi, -0.5 * g.d) * g.cell_x();
    const std::vector<int> dims(static_cast<std::size_t>(g.d), N);
    warm_plan(dims);

    parallel_for(M, [&](std::size_t a) {
        std::vector<cplx> w(M);
        if (g.d == 1) {
            int ia = static_cast<int>(a);
            for (int iy = 0; iy < N; ++iy)
                w[static_cast<std::size_t>(iy)] =
                    f.at(iy) * std::conj(phi.at(wrap_idx(iy - ia + N / 2, N)));
        } else {
            int ia0 = static_cast<int>(a) / N, ia1 = static_cast<int>(a) % N;
            for (int iy0 = 0; iy0 < N; ++iy0) {
                int is0 = wrap_idx(iy0 - ia0 + N / 2, N);
                for (int iy1 = 0; iy1 < N; ++iy1) {
                    w[static_cast<std::size_t>(iy0) * N + iy1] =
                        f.at(iy0, iy1) * std::conj(phi.at(is0, wrap_idx(iy1 - ia1 + N / 2, N)));
                }
            }
        }
        centered_dft(w, dims, -1);
        for (std::size_t b = 0; b < M; ++b) out.at(a, b) = w[b] * scl;
    });
    return out;
}

SampledSignal adjoint_stft(const DenseSTFT& F, const SampledSignal& phi) {
    require(F.grid == phi.grid, "adjoint_stft: grid mismatch");
    const GridSpec g = F.grid;
    const int N = g.axis();
    const std::size_t M = F.points();
    require(F.v.size() == M * M, "adjoint_stft: table shape mismatch");
    const std::vector<int> dims(static_cast<std::size_t>(g.d), N);
    warm_plan(dims);

    // rows first: G_a = inverse transform of F(a, .), an M x M scratch table
    std::vector<cplx> rows(M * M);
    const double inv_scl = std::pow(2.0 * pi, -0.5 * g.d) * g.cell_xi();
    parallel_for(M, [&](std::size_t a) {
        std::vector<cplx> w(F.v.begin() + static_cast<std::ptrdiff_t>(a * M),
                            F.v.begin() + static_cast<std::ptrdiff_t>((a + 1) * M));
        centered_dft(w, dims, +1);
        for (std::size_t t = 0; t < M; ++t) rows[a * M + t] = w[t] * inv_scl;
    });

    // out(t) = dx^d sum_a G_a(t) phi(t - x_a)
    SampledSignal out = zero_signal(g);
    const double cell = g.cell_x();
    parallel_for(M, [&](std::size_t t) {
        cplx acc{0.0, 0.0};
        if (g.d == 1) {
            int it = static_cast<int>(t);
            for (int ia = 0; ia < N; ++ia)
                acc += rows[static_cast<std::size_t>(ia) * M + t] *
                       phi.at(wrap_idx(it - ia + N / 2, N));
        } else {
            int it0 = static_cast<int>(t) / N, it1 = static_cast<int>(t) % N;
            for (int ia0 = 0; ia0 < N; ++ia0) {
                int is0 = wrap_idx(it0 - ia0 + N / 2, N);
                for (int ia1 = 0; ia1 < N; ++ia1) {
                    acc += rows[(static_cast<std::size_t>(ia0) * N + ia1) * M + t] *
                           phi.at(is0, wrap_idx(it1 - ia1 + N / 2, N));
                }
            }
        }
        out.v[t] = acc * cell;
    });
    return out;
}

DenseSTFT twisted_convolve(const DenseSTFT& F, const DenseSTFT& G) {
    require(F.grid == G.grid, "twisted_convolve: grid mismatch");
    const GridSpec g = F.grid;
    const int N = g.axis();
    const std::size_t M = F.points();
    require(M <= 65536, "twisted_convolve: phase-space size beyond the cost cap");
    require(F.v.size() == M * M && G.v.size() == M * M, "twisted_convolve: table shape mismatch");

    // per-axis phase table: ph[iy][iw] = e^{-i x(iy) xi(iw)}
    std::vector<cplx> ph(static_cast<std::size_t>(N) * N);
    for (int iy = 0; iy < N; ++iy) {
        for (int iw = 0; iw < N; ++iw) {
            double arg = -g.x(iy) * g.xi(iw);
            ph[static_cast<std::size_t>(iy) * N + iw] = cplx{std::cos(arg), std::sin(arg)};
        }
    }
    const double scl = std::pow(2.0 * pi, -0.5 * g.d) * g.cell_x() * g.cell_xi();
    DenseSTFT out{g, std::vector<cplx>(M * M)};

    if (g.d == 1) {
        parallel_for(M, [&](std::size_t ox) {
            int ix = static_cast<int>(ox);
            std::vector<int> rx(static_cast<std::size_t>(N));
            for (int iy = 0; iy < N; ++iy) rx[static_cast<std::size_t>(iy)] =
                wrap_idx(ix - iy + N / 2, N);
            std::vector<int> re(static_cast<std::size_t>(N));
            for (std::size_t ok = 0; ok < M; ++ok) {
                int ik = static_cast<int>(ok);
                for (int ie = 0; ie < N; ++ie) re[static_cast<std::size_t>(ie)] =
                    wrap_idx(ik - ie + N / 2, N);
                cplx acc{0.0, 0.0};
                for (int iy = 0; iy < N; ++iy) {
                    const cplx* Frow = &F.v[static_cast<std::size_t>(rx[iy]) * M];
                    const cplx* Grow = &G.v[static_cast<std::size_t>(iy) * M];
                    const cplx* Prow = &ph[static_cast<std::size_t>(iy) * N];
                    for (int ie = 0; ie < N; ++ie) {
                        int iw = re[static_cast<std::size_t>(ie)];
                        acc += Frow[iw] * Grow[ie] * Prow[iw];
                    }
                }
                out.at(ox, ok) = acc * scl;
            }
        });
        return out;
    }

    // d = 2: indices are (axis0 * N + axis1) pairs on both slots
    parallel_for(M, [&](std::size_t ox) {
        int ix0 = static_cast<int>(ox) / N, ix1 = static_cast<int>(ox) % N;
        for (std::size_t ok = 0; ok < M; ++ok) {
            int ik0 = static_cast<int>(ok) / N, ik1 = static_cast<int>(ok) % N;
            cplx acc{0.0, 0.0};
            for (std::size_t iy = 0; iy < M; ++iy) {
                int iy0 = static_cast<int>(iy) / N, iy1 = static_cast<int>(iy) % N;
                std::size_t fx = static_cast<std::size_t>(wrap_idx(ix0 - iy0 + N / 2, N)) * N +
                                 wrap_idx(ix1 - iy1 + N / 2, N);
                const cplx* Frow = &F.v[fx * M];
                const cplx* Grow = &G.v[iy * M];
                for (std::size_t ie = 0; ie < M; ++ie) {
                    int ie0 = static_cast<int>(ie) / N, ie1 = static_cast<int>(ie) % N;
                    int iw0 = wrap_idx(ik0 - ie0 + N / 2, N);
                    int iw1 = wrap_idx(ik1 - ie1 + N / 2, N);
                    acc += Frow[static_cast<std::size_t>(iw0) * N + iw1] * Grow[ie] *
                           ph[static_cast<std::size_t>(iy0) * N + iw0] *
                           ph[static_cast<std::size_t>(iy1) * N + iw1];
                }
            }
            out.at(ox, ok) = acc * scl;
        }
    });
    return out;
}

DenseSTFT project(const DenseSTFT& F, const SampledSignal& phi) {
    double nrm = l2_norm(phi);
    require(nrm > 0.0, "project: zero window");
    DenseSTFT out = stft_dense(adjoint_stft(F, phi), phi);
    for (cplx& z : out.v) z /= nrm * nrm;
    return out;
}

// ---------------------------------------------------------------------------
// Lattice analysis / synthesis
// ---------------------------------------------------------------------------

namespace {

struct LatticeShape {
    int P;   // lattice positions
    int K;   // stored frequencies
    std::vector<int> jpos;  // per flattened j, per axis: integer position
    std::vector<int> kidx;  // per flattened k, per axis: integer frequency index
};

LatticeShape lattice_shape(const GridSpec& g) {
    LatticeShape s;
    int axes_p = g.L, axes_k = 2 * g.n;
    s.P = g.d == 1 ? axes_p : axes_p * axes_p;
    s.K = g.d == 1 ? axes_k : axes_k * axes_k;
    s.jpos.resize(static_cast<std::size_t>(s.P) * g.d);
    s.kidx.resize(static_cast<std::size_t>(s.K) * g.d);
    for (int j = 0; j < s.P; ++j) {
        if (g.d == 1) {
            s.jpos[static_cast<std::size_t>(j)] = j - g.L / 2;
        } else {
            s.jpos[static_cast<std::size_t>(j) * 2] = j / axes_p - g.L / 2;
            s.jpos[static_cast<std::size_t>(j) * 2 + 1] = j % axes_p - g.L / 2;
        }
    }
    for (int k = 0; k < s.K; ++k) {
        if (g.d == 1) {
            s.kidx[static_cast<std::size_t>(k)] = k - g.n;
        } else {
            s.kidx[static_cast<std::size_t>(k) * 2] = k / axes_k - g.n;
            s.kidx[static_cast<std::size_t>(k) * 2 + 1] = k % axes_k - g.n;
        }
    }
    return s;
}

}  // namespace

GaborCoefficients analyze(const SampledSignal& f, const SampledSignal& phi) {
    require(f.grid == phi.grid, "analyze: grid mismatch");
    const GridSpec g = f.grid;
    const int N = g.axis(), n = g.n, two_n = 2 * n;
    const LatticeShape shape = lattice_shape(g);
    const std::vector<int> dims(static_cast<std::size_t>(g.d), two_n);
    warm_plan(dims);

    GaborCoefficients out;
    out.grid = g;
    IndexedCoefficients& t = out.table;
    t.j_count = static_cast<std::size_t>(shape.P);
    t.k_count = static_cast<std::size_t>(shape.K);
    t.dj = g.d;
    t.dk = g.d;
    t.value.assign(t.j_count * t.k_count, cplx{0.0, 0.0});
    t.j_coord.resize(t.j_count * g.d);
    t.k_coord.resize(t.k_count * g.d);
    for (std::size_t j = 0; j < t.j_count; ++j)
        for (int a = 0; a < g.d; ++a)
            t.j_coord[j * g.d + a] = shape.jpos[j * g.d + a];
    for (std::size_t k = 0; k < t.k_count; ++k)
        for (int a = 0; a < g.d; ++a)
            t.k_coord[k * g.d + a] = pi * shape.kidx[k * g.d + a];

    const double scl = std::pow(0.5 / n, g.d);  // 2^{-d} * n^{-d}
    parallel_for(t.j_count, [&](std::size_t j) {
        std::vector<cplx> w(static_cast<std::size_t>(shape.K));
        if (g.d == 1) {
            int base = (shape.jpos[j] + g.L / 2) * n;
            for (int m = -n; m < n; ++m)
                w[static_cast<std::size_t>(m + n)] =
                    f.at(wrap_idx(base + m, N)) * phi.at(N / 2 + m);
        } else {
            int base0 = (shape.jpos[j * 2] + g.L / 2) * n;
            int base1 = (shape.jpos[j * 2 + 1] + g.L / 2) * n;
            for (int m0 = -n; m0 < n; ++m0) {
                for (int m1 = -n; m1 < n; ++m1) {
                    w[static_cast<std::size_t>(m0 + n) * two_n + (m1 + n)] =
                        f.at(wrap_idx(base0 + m0, N), wrap_idx(base1 + m1, N)) *
                        phi.at(N / 2 + m0, N / 2 + m1);
                }
            }
        }
        centered_dft(w, dims, -1);
        for (std::size_t k = 0; k < t.k_count; ++k) {
            long parity = 0;
            for (int a = 0; a < g.d; ++a)
                parity += static_cast<long>(shape.jpos[j * g.d + a]) * shape.kidx[k * g.d + a];
            double sign = (parity & 1L) ? -1.0 : 1.0;
            t.at(j, k) = w[k] * scl * sign;
        }
    });

    // l2 mass of the outermost frequency shell vs total: a crude truncation
    // indicator for signals that press against the Nyquist window
    double shell = 0.0, total = 0.0;
    for (std::size_t j = 0; j < t.j_count; ++j) {
        for (std::size_t k = 0; k < t.k_count; ++k) {
            double m = std::norm(t.at(j, k));
            total += m;
            for (int a = 0; a < g.d; ++a) {
                int ki = shape.kidx[k * g.d + a];
                if (ki == -n || ki == n - 1) {
                    shell += m;
                    break;
                }
            }
        }
    }
    out.tail_ratio = total > 0.0 ? std::sqrt(shell / total) : 0.0;
    return out;
}

SampledSignal synthesize(const GaborCoefficients& c, const SampledSignal& psi) {
    const GridSpec g = c.grid;
    require(psi.grid == g, "synthesize: grid mismatch");
    const int N = g.axis(), n = g.n, two_n = 2 * n;
    const LatticeShape shape = lattice_shape(g);
    const IndexedCoefficients& t = c.table;
    require(t.j_count == static_cast<std::size_t>(shape.P) &&
                t.k_count == static_cast<std::size_t>(shape.K),
            "synthesize: table shape mismatch");
    const std::vector<int> dims(static_cast<std::size_t>(g.d), two_n);

    SampledSignal out = zero_signal(g);
    std::vector<cplx> w(t.k_count);
    for (std::size_t j = 0; j < t.j_count; ++j) {
        for (std::size_t k = 0; k < t.k_count; ++k) {
            long parity = 0;
            for (int a = 0; a < g.d; ++a)
                parity += static_cast<long>(shape.jpos[j * g.d + a]) * shape.kidx[k * g.d + a];
            double sign = (parity & 1L) ? -1.0 : 1.0;
            w[k] = t.at(j, k) * sign;
        }
        centered_dft(w, dims, +1);
        if (g.d == 1) {
            int base = (shape.jpos[j] + g.L / 2) * n;
            for (int m = -n; m < n; ++m)
                out.at(wrap_idx(base + m, N)) += w[static_cast<std::size_t>(m + n)] *
                                                 psi.at(N / 2 + m);
        } else {
            int base0 = (shape.jpos[j * 2] + g.L / 2) * n;
            int base1 = (shape.jpos[j * 2 + 1] + g.L / 2) * n;
            for (int m0 = -n; m0 < n; ++m0) {
                for (int m1 = -n; m1 < n; ++m1) {
                    out.at(wrap_idx(base0 + m0, N), wrap_idx(base1 + m1, N)) +=
                        w[static_cast<std::size_t>(m0 + n) * two_n + (m1 + n)] *
                        psi.at(N / 2 + m0, N / 2 + m1);
                }
            }
        }
    }
    return out;
}

}  // namespace modspace
