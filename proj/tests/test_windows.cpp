#include "doctest.h"

#include <cmath>

#include "modspace/windows.hpp"

using namespace modspace;

TEST_SUITE("windows") {

TEST_CASE("ramp complement identity and clamps") {
    Ramp r = make_ramp(2.0);
    CHECK(r(-0.3) == 0.0);
    CHECK(r(1.7) == 1.0);
    SplitMix64 rng(3);
    for (int t = 0; t < 200; ++t) {
        double u = rng.uniform();
        CHECK(r(u) + r(1.0 - u) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(r(u) >= 0.0);
        CHECK(r(u) <= 1.0);
    }
}

TEST_CASE("axis profiles: supports, plateaus, and the pointwise product law") {
    for (double sigma : {1.5, 2.0, 3.0}) {
        CHECK(phi_profile(0.0, sigma) == 1.0);
        CHECK(phi_profile(0.25, sigma) == 1.0);
        CHECK(phi_profile(0.76, sigma) == 0.0);
        CHECK(psi_profile(0.74, sigma) == 1.0);
        CHECK(psi_profile(1.01, sigma) == 0.0);
        // psi == 1 wherever phi != 0, so phi * psi == phi everywhere
        for (double x = -1.5; x <= 1.5; x += 0.01) {
            CHECK(phi_profile(x, sigma) * psi_profile(x, sigma) ==
                  doctest::Approx(phi_profile(x, sigma)).epsilon(1e-15));
        }
    }
}

TEST_CASE("window pair: partition of unity on the grid") {
    for (int L : {4, 16}) {
        GridSpec g = make_grid(1, L, 16);
        WindowPair wp = make_window_pair(g, 2.0);
        CHECK(partition_unity_error(wp) < 1e-13);
    }
    GridSpec g2 = make_grid(2, 4, 8);
    CHECK(partition_unity_error(make_window_pair(g2, 2.0)) < 1e-12);
}

TEST_CASE("sampled windows vanish outside their declared supports") {
    GridSpec g = make_grid(1, 8, 16);
    WindowPair wp = make_window_pair(g, 2.0);
    for (int i = 0; i < g.axis(); ++i) {
        double x = g.x(i);
        if (std::abs(x) >= 0.75) CHECK(std::abs(wp.phi.at(i)) == 0.0);
        if (std::abs(x) >= 1.0) CHECK(std::abs(wp.psi.at(i)) == 0.0);
        CHECK(std::abs(wp.phi.at(i) * wp.psi.at(i) - wp.phi.at(i)) < 1e-15);
    }
}

TEST_CASE("spectral derivative: exact on characters, Hermite forms on gaussians") {
    GridSpec g = make_grid(1, 16, 16);

    // d/dx e^{i xi0 x} = i xi0 e^{i xi0 x} for an on-grid frequency
    SampledSignal ch = zero_signal(g);
    double xi0 = 3.0 * g.dxi();
    for (int i = 0; i < g.axis(); ++i) {
        double ph = xi0 * g.x(i);
        ch.at(i) = cplx{std::cos(ph), std::sin(ph)};
    }
    SampledSignal dch = spectral_derivative(ch, {1});
    double err = 0.0;
    for (int i = 0; i < g.axis(); ++i)
        err = std::max(err, std::abs(dch.at(i) - cplx{0.0, xi0} * ch.at(i)));
    CHECK(err < 1e-10);

    // gaussian: f^(k) = (-1)^k He_k(x) f(x)
    SampledSignal f = sample(g, SignalSpec::gaussian({0.0}, 1.0));
    auto hermite = [](int k, double x) {
        switch (k) {
            case 1: return -x;
            case 2: return x * x - 1.0;
            case 3: return 3.0 * x - x * x * x;
            default: return 1.0;
        }
    };
    for (int k : {1, 2, 3}) {
        SampledSignal dk = spectral_derivative(f, {k});
        double worst = 0.0;
        for (int i = 0; i < g.axis(); ++i) {
            double x = g.x(i);
            worst = std::max(worst, std::abs(dk.at(i) - hermite(k, x) * f.at(i)));
        }
        CHECK(worst < 1e-7);
    }
}

TEST_CASE("two-axis spectral derivative is the product of axis operators") {
    // width 0.5 needs L = 8: the periodization guard rejects it on L = 4
    GridSpec g = make_grid(2, 8, 8);
    SampledSignal f = sample(g, SignalSpec::gaussian({0.0, 0.0}, 0.5));
    SampledSignal dxy = spectral_derivative(f, {1, 1});
    // on a product gaussian, d_x d_y f = (x/w^2)(y/w^2) f
    double worst = 0.0;
    for (int i = 0; i < g.axis(); ++i)
        for (int j = 0; j < g.axis(); ++j) {
            double x = g.x(i), y = g.x(j);
            worst = std::max(worst,
                             std::abs(dxy.at(i, j) - cplx{16.0 * x * y, 0.0} * f.at(i, j)));
        }
    CHECK(worst < 1e-6);
}

TEST_CASE("gevrey seminorm: per-order sups match the gaussian closed forms") {
    GridSpec g = make_grid(1, 16, 16);
    SampledSignal f = sample(g, SignalSpec::gaussian({0.0}, 1.0));
    GevreyReport rep = gevrey_seminorm(f, 1.0, 2.0, 3);
    REQUIRE(rep.order_sup.size() == 4);
    CHECK(rep.order_sup[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.order_sup[1] == doctest::Approx(std::exp(-0.5)).epsilon(1e-6));
    CHECK(rep.order_sup[2] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rep.value >= rep.order_sup[0]);
    CHECK(rep.suspect_order == -1);
}

TEST_CASE("fourier decay fit certifies the subexponential window tails") {
    GridSpec g = make_grid(1, 8, 32);
    WindowPair wp = make_window_pair(g, 2.0);
    DecayFit phi_fit = fourier_decay_fit(wp.phi, 2.0);
    CHECK(phi_fit.points > 10);
    CHECK(phi_fit.rate > 0.1);

    // a gaussian decays much faster than any |xi|^{1/2} template, so its
    // fitted rate dominates the window's.  Width 0.1 keeps the spectrum above
    // the fft roundoff floor across the whole fit band [4pi, 16pi]; a unit
    // width gaussian would sit below 1e-30 there and fit as flat noise.
    DecayFit gauss_fit = fourier_decay_fit(sample(g, SignalSpec::gaussian({0.0}, 0.1)), 2.0);
    CHECK(gauss_fit.rate > phi_fit.rate);
}

}  // TEST_SUITE
