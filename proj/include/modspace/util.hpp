#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace modspace {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// ---------------------------------------------------------------------------
// Deterministic randomness.
//
// Reports must be byte-identical across runs and across standard libraries,
// so no std::*_distribution is used anywhere: splitmix64 supplies the bits and
// Box-Muller turns them into normals, both with pinned algorithms.
// ---------------------------------------------------------------------------

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), 53-bit mantissa
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in (0,1], safe as a log() argument
    double uniform_pos() { return 1.0 - uniform(); }

    // standard normal via Box-Muller (one value per call; the twin is dropped
    // to keep the consumption count independent of call pairing)
    double normal() {
        double u = uniform_pos();
        double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * pi * v);
    }

    cplx complex_normal() {  // E|z|^2 = 1
        double u = uniform_pos();
        double v = uniform();
        double r = std::sqrt(-std::log(u));
        return {r * std::cos(2.0 * pi * v), r * std::sin(2.0 * pi * v)};
    }

    // uniform integer in [0, m)
    std::uint64_t below(std::uint64_t m) { return next() % m; }
};

// Per-trial seed derivation: trials are seeded by counter from the master
// seed, never by sharing a stream, so parallel and serial runs agree.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
    SplitMix64 s(master ^ (0x632be59bd9b4e019ULL + counter * 0x100000001b3ULL));
    s.next();
    return s.next();
}

// ---------------------------------------------------------------------------
// Gevrey ramp.
//
// r(t) = h(t) / (h(t) + h(1-t)) with h(t) = exp(-t^{-1/(sigma-1)}) for t > 0,
// clamped to 0 on t <= 0 and 1 on t >= 1.  Shared by the window constructions
// and the compactly supported bump signals.  r(t) + r(1-t) = 1 holds to
// machine precision because both values are quotients with the same
// denominator.
// ---------------------------------------------------------------------------

inline double gevrey_h(double t, double sigma) {
    if (t <= 0.0) return 0.0;
    return std::exp(-std::pow(t, -1.0 / (sigma - 1.0)));
}

inline double gevrey_ramp(double t, double sigma) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double a = gevrey_h(t, sigma);
    double b = gevrey_h(1.0 - t, sigma);
    return a / (a + b);
}

// ---------------------------------------------------------------------------
// parallel_for: static block partition over a small worker pool.  Work items
// must write only to their own output slots; determinism then needs no locks.
// ---------------------------------------------------------------------------

inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                         unsigned max_threads = 0) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (max_threads != 0 && max_threads < hw) hw = max_threads;
    if (hw <= 1 || count < 2 * hw) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(hw);
    std::size_t chunk = (count + hw - 1) / hw;
    for (unsigned t = 0; t < hw; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Formatting helpers for byte-stable reports.
// ---------------------------------------------------------------------------

std::string fmt_double(double x);       // shortest round-trip decimal
std::string fmt_complex(const cplx& z); // "re+imj" / "re-imj"

inline double sqr(double x) { return x * x; }

[[noreturn]] inline void fail(const std::string& what) { throw std::runtime_error(what); }

inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace modspace
