#include "modspace/weights.hpp"

#include <cmath>

namespace modspace {

namespace {

double norm2(const double* x, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += x[i] * x[i];
    return s;
}

// enumerate the sample cube [-box, box]^dim with the given step
template <typename F>
void for_cube(int dim, double box, double step, F&& body) {
    int half = static_cast<int>(std::floor(box / step + 1e-9));
    std::vector<double> pt(static_cast<std::size_t>(dim));
    std::vector<int> idx(static_cast<std::size_t>(dim), -half);
    for (;;) {
        for (int i = 0; i < dim; ++i) pt[static_cast<std::size_t>(i)] = idx[i] * step;
        body(pt.data());
        int a = 0;
        while (a < dim && ++idx[a] > half) idx[a++] = -half;
        if (a == dim) break;
    }
}

}  // namespace

double WeightPart::eval(const double* x) const {
    switch (kind) {
        case Kind::constant:
            return 1.0;
        case Kind::polynomial:
            return std::pow(1.0 + norm2(x, dim), 0.5 * t);
        case Kind::subexponential:
            return std::exp(r * std::pow(norm2(x, dim), 0.5 / s));
    }
    fail("WeightPart::eval: bad kind");
}

WeightPart WeightPart::witness() const {
    WeightPart v = *this;
    v.t = std::abs(t);
    v.r = std::abs(r);
    return v;
}

double WeightPart::witness_constant() const {
    // Peetre: <x+y>^t <= 2^{|t|/2} <x>^t <y>^{|t|}; the subexponential and
    // constant kinds are exactly submultiplicative.
    return kind == Kind::polynomial ? std::pow(2.0, 0.5 * std::abs(t)) : 1.0;
}

double Weight::eval(const double* x) const {
    double v = first.eval(x);
    if (second) v *= second->eval(x + first.dim);
    return v;
}

double Weight::eval(const std::vector<double>& x) const {
    require(static_cast<int>(x.size()) == dim(), "Weight::eval: dimension mismatch");
    return eval(x.data());
}

Weight Weight::witness() const {
    Weight v;
    v.first = first.witness();
    if (second) v.second = second->witness();
    return v;
}

double Weight::witness_constant() const {
    double c = first.witness_constant();
    if (second) c *= second->witness_constant();
    return c;
}

Weight Weight::one(int dim) {
    Weight w;
    w.first = WeightPart{WeightPart::Kind::constant, dim, 0.0, 0.0, 1.0};
    return w;
}

Weight Weight::polynomial(double t, int dim) {
    Weight w;
    w.first = WeightPart{WeightPart::Kind::polynomial, dim, t, 0.0, 1.0};
    return w;
}

Weight Weight::subexponential(double r, double s, int dim) {
    require(s >= 1.0, "Weight::subexponential: s must be >= 1");
    Weight w;
    w.first = WeightPart{WeightPart::Kind::subexponential, dim, 0.0, r, s};
    return w;
}

Weight Weight::split(WeightPart position, WeightPart frequency) {
    Weight w;
    w.first = position;
    w.second = frequency;
    return w;
}

namespace {

ModerateReport check_moderate_part(const WeightPart& w, const WeightPart& v, double box,
                                   double step) {
    double worst = 0.0;
    for_cube(w.dim, box, step, [&](const double* x) {
        double wx = w.eval(x);
        for_cube(w.dim, box, step, [&](const double* y) {
            std::vector<double> xy(static_cast<std::size_t>(w.dim));
            for (int i = 0; i < w.dim; ++i) xy[static_cast<std::size_t>(i)] = x[i] + y[i];
            double ratio = w.eval(xy.data()) / (wx * v.eval(y));
            if (ratio > worst) worst = ratio;
        });
    });
    return ModerateReport{true, worst, 0.0};
}

}  // namespace

ModerateReport check_moderate(const Weight& w, const Weight& v, double declared_C, double box,
                              double step) {
    require(w.dim() == v.dim() && w.is_split() == v.is_split(),
            "check_moderate: weight/witness shape mismatch");
    double worst = check_moderate_part(w.first, v.first, box, step).worst;
    if (w.second) worst *= check_moderate_part(*w.second, *v.second, box, step).worst;
    ModerateReport rep;
    rep.worst = worst;
    rep.declared = declared_C;
    rep.ok = worst <= declared_C * 1.01;
    return rep;
}

ModerateReport check_moderate(const Weight& w, double box, double step) {
    return check_moderate(w, w.witness(), w.witness_constant(), box, step);
}

WeightClassReport class_of(const Weight& w, double s) {
    require(s > 0.0, "class_of: s must be positive");
    auto part_poly = [](const WeightPart& p) {
        return p.kind != WeightPart::Kind::subexponential || p.r == 0.0;
    };
    auto part_pes = [s, &part_poly](const WeightPart& p) {
        if (part_poly(p)) return true;       // polynomially bounded growth
        if (s <= 1.0) return true;           // P_{E,s} = P_E here
        return s <= p.s;                     // e^{r|.|^{1/s0}} needs 1/s >= 1/s0
    };
    WeightClassReport rep;
    rep.polynomially_moderate = part_poly(w.first) && (!w.second || part_poly(*w.second));
    rep.exp_moderate = true;
    rep.in_P_E_s = part_pes(w.first) && (!w.second || part_pes(*w.second));
    rep.label = rep.polynomially_moderate ? "P" : "P_E";
    return rep;
}

std::vector<double> pes_ratio_profile(const Weight& w, double s, double r,
                                      const std::vector<double>& boxes, double step) {
    require(!w.is_split(), "pes_ratio_profile: pass a single weight factor");
    std::vector<double> out;
    out.reserve(boxes.size());
    int dim = w.dim();
    for (double box : boxes) {
        double worst = 0.0;
        for_cube(dim, box, step, [&](const double* x) {
            double wx = w.eval(x);
            for_cube(dim, box, step, [&](const double* y) {
                std::vector<double> xy(static_cast<std::size_t>(dim));
                double ny = 0.0;
                for (int i = 0; i < dim; ++i) {
                    xy[static_cast<std::size_t>(i)] = x[i] + y[i];
                    ny += y[i] * y[i];
                }
                double v = std::exp(r * std::pow(ny, 0.5 / s));
                double ratio = w.eval(xy.data()) / (wx * v);
                if (ratio > worst) worst = ratio;
            });
        });
        out.push_back(worst);
    }
    return out;
}

WeightPairReport check_thm_weight_pair(const Weight& w02, const Weight& w01, const Weight& w0,
                                       double box, double step) {
    require(w02.dim() == w01.dim() && w02.dim() == w0.dim(),
            "check_thm_weight_pair: dimension mismatch");
    auto sup_ratio = [&](double b) {
        double worst = 0.0;
        for_cube(w02.dim(), b, step, [&](const double* x) {
            double ratio = w02.eval(x) / (w01.eval(x) * w0.eval(x));
            if (ratio > worst) worst = ratio;
        });
        return worst;
    };
    WeightPairReport rep;
    double half = sup_ratio(0.5 * box);
    rep.constant = sup_ratio(box);
    rep.growth = half > 0.0 ? rep.constant / half : 0.0;
    rep.bounded = rep.growth <= 1.05;
    return rep;
}

}  // namespace modspace
