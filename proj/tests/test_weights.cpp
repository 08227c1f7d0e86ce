#include "doctest.h"

#include <cmath>

#include "modspace/weights.hpp"

using namespace modspace;

TEST_SUITE("weights") {

TEST_CASE("catalog evaluation matches the closed forms") {
    Weight p = Weight::polynomial(3.0, 1);
    for (double x : {-2.5, 0.0, 0.75, 4.0}) {
        double want = std::pow(1.0 + x * x, 1.5);
        CHECK(p.eval(&x) == doctest::Approx(want).epsilon(1e-14));
    }

    Weight e = Weight::subexponential(0.7, 2.0, 1);
    for (double x : {-3.0, 0.5, 2.0}) {
        double want = std::exp(0.7 * std::sqrt(std::abs(x)));
        CHECK(e.eval(&x) == doctest::Approx(want).epsilon(1e-14));
    }

    Weight s = Weight::split(WeightPart{WeightPart::Kind::polynomial, 1, 2.0, 0.0, 1.0},
                             WeightPart{WeightPart::Kind::subexponential, 1, 0.0, 0.5, 2.0});
    CHECK(s.dim() == 2);
    double xy[2] = {1.0, 4.0};
    CHECK(s.eval(xy) == doctest::Approx(2.0 * std::exp(1.0)).epsilon(1e-13));
}

TEST_CASE("every catalog weight is moderate against its own witness") {
    for (const Weight& w : {Weight::one(1), Weight::polynomial(2.0, 1),
                            Weight::polynomial(-1.5, 1), Weight::subexponential(1.0, 2.0, 1),
                            Weight::polynomial(1.0, 2)}) {
        ModerateReport rep = check_moderate(w);
        CHECK(rep.ok);
        CHECK(rep.worst <= rep.declared * 1.01);
    }
}

TEST_CASE("peetre constant is what the polynomial weight declares") {
    // <x+y>^t <= 2^{|t|/2} <x>^t <y>^{|t|}; the measured constant must sit
    // below the declared one but within sight of it (the bound is sharp-ish
    // along the diagonal x = -y/2)
    Weight w = Weight::polynomial(2.0, 1);
    ModerateReport rep = check_moderate(w, 6.0, 0.25);
    CHECK(rep.declared == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.ok);
    CHECK(rep.worst > 1.0);
}

TEST_CASE("subexponential weights are moderate with constant one") {
    ModerateReport rep = check_moderate(Weight::subexponential(0.9, 3.0, 1));
    CHECK(rep.ok);
    CHECK(rep.declared == doctest::Approx(1.0));
}

TEST_CASE("weight classes: polynomial growth lands in P, subexponential outside") {
    WeightClassReport p = class_of(Weight::polynomial(2.0, 1), 2.0);
    CHECK(p.polynomially_moderate);
    CHECK(p.exp_moderate);
    CHECK(p.in_P_E_s);
    CHECK(p.label == "P");

    WeightClassReport c = class_of(Weight::one(2), 4.0);
    CHECK(c.polynomially_moderate);
    CHECK(c.in_P_E_s);

    // index-2 subexponential: inside P_{E,s} exactly for s <= 2
    Weight sub = Weight::subexponential(1.0, 2.0, 1);
    CHECK(!class_of(sub, 1.0).polynomially_moderate);
    CHECK(class_of(sub, 1.0).in_P_E_s);
    CHECK(class_of(sub, 2.0).in_P_E_s);
    CHECK(!class_of(sub, 3.0).in_P_E_s);
    CHECK(class_of(sub, 3.0).label == "P_E");
}

TEST_CASE("P_{E,s} ratio profiles: bounded inside the class, growing outside") {
    Weight sub = Weight::subexponential(1.0, 2.0, 1);
    std::vector<double> boxes = {2.0, 4.0, 8.0, 16.0};

    // witness with the weight's own index: profile flat at 1
    std::vector<double> inside = pes_ratio_profile(sub, 2.0, 1.0, boxes);
    CHECK(inside.back() <= inside.front() * 1.01);

    // too-small witness index: e^{|x+y|^{1/2}} eventually beats e^{r|y|^{1/3}}
    std::vector<double> outside = pes_ratio_profile(sub, 3.0, 1.0, boxes);
    CHECK(outside.back() > 2.0 * outside.front());
}

TEST_CASE("three-weight comparisons measure the transfer constant") {
    // <x>^2 <= C <x>^1 <x>^1 with C = 1: bounded
    WeightPairReport ok = check_thm_weight_pair(Weight::polynomial(2.0, 1),
                                                Weight::polynomial(1.0, 1),
                                                Weight::polynomial(1.0, 1));
    CHECK(ok.bounded);
    CHECK(ok.constant == doctest::Approx(1.0).epsilon(1e-12));

    // <x>^3 against <x>^1 <x>^1 keeps growing with the box
    WeightPairReport bad = check_thm_weight_pair(Weight::polynomial(3.0, 1),
                                                 Weight::polynomial(1.0, 1),
                                                 Weight::polynomial(1.0, 1));
    CHECK(!bad.bounded);
    CHECK(bad.growth > 1.5);
}

TEST_CASE("witnesses are submultiplicative with their declared constants") {
    // Subexponential witnesses satisfy v(x+y) <= v(x) v(y) exactly (concavity
    // of u^{1/s}); polynomial ones need the Peetre factor 2^{|t|/2} -- already
    // <2>^2 = 5 > <1>^2 <1>^2 = 4, so C = 1 would be wrong for them.
    Weight sub = Weight::subexponential(0.8, 2.0, 1).witness();
    CHECK(check_moderate(sub, sub, 1.0).ok);

    Weight poly = Weight::polynomial(2.0, 1).witness();
    ModerateReport tight = check_moderate(poly, poly, 1.0);
    CHECK(!tight.ok);
    CHECK(tight.worst > 5.0 / 4.0 - 1e-12);
    CHECK(check_moderate(poly, poly, poly.witness_constant()).ok);
}

}  // TEST_SUITE
