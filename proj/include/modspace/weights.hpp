#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modspace/util.hpp"

namespace modspace {

// ---------------------------------------------------------------------------
// Moderate weight catalog.
//
// A weight w on R^m is moderate when w(x+y) <= C w(x) v(y) for a
// submultiplicative witness v.  Catalog kinds:
//   constant          w = 1
//   polynomial(t)     w(x) = <x>^t = (1+|x|^2)^{t/2}, witness <y>^{|t|},
//                     C = 2^{|t|/2} (Peetre)
//   subexponential(r,s)  w(x) = e^{r|x|^{1/s}}, s >= 1, witness e^{|r||y|^{1/s}},
//                     C = 1 (subadditivity of u -> u^{1/s})
// A split weight w(x,xi) = w1(x) * w2(xi) models phase-space weights that
// depend on position and frequency through separate factors; the constant-
// in-one-variable weights the multiplier theorems need are splits with a
// constant factor.
// ---------------------------------------------------------------------------

struct WeightPart {
    enum class Kind { constant, polynomial, subexponential };
    Kind kind = Kind::constant;
    int dim = 1;     // number of coordinates this part consumes
    double t = 0.0;  // polynomial degree
    double r = 0.0;  // subexponential rate
    double s = 1.0;  // subexponential index, s >= 1

    double eval(const double* x) const;
    WeightPart witness() const;       // submultiplicative majorant
    double witness_constant() const;  // C in w(x+y) <= C w(x) v(y)
};

struct Weight {
    WeightPart first;
    std::optional<WeightPart> second;  // set <=> split weight

    int dim() const { return first.dim + (second ? second->dim : 0); }
    bool is_split() const { return second.has_value(); }

    double eval(const double* x) const;
    double eval(const std::vector<double>& x) const;

    Weight witness() const;
    double witness_constant() const;

    static Weight one(int dim);
    static Weight polynomial(double t, int dim);
    static Weight subexponential(double r, double s, int dim);
    static Weight split(WeightPart position, WeightPart frequency);
};

// Brute-force moderateness check on [-box, box]^dim sampled with `step`:
// worst constant max w(x+y) / (w(x) v(y)).  Split weights factor exactly, so
// their parts are checked independently and the constants multiply.
struct ModerateReport {
    bool ok = false;      // worst constant within the declared bound (x 1.01)
    double worst = 0.0;   // measured constant
    double declared = 0.0;
};
ModerateReport check_moderate(const Weight& w, const Weight& v, double declared_C,
                              double box = 4.0, double step = 0.5);
// convenience: check against the weight's own witness
ModerateReport check_moderate(const Weight& w, double box = 4.0, double step = 0.5);

// Weight-class query.  Every catalog weight is moderate (class P_E); the
// polynomialy moderate subclass P contains constant and polynomial kinds.
// Membership in P_{E,s} (witness e^{r|y|^{1/s}} for some r > 0) holds for all
// s when the weight grows at most polynomially, and exactly for s <= s0 for a
// subexponential weight of index s0; s <= 1 is always inside because
// P_{E,s} = P_E there.
struct WeightClassReport {
    bool polynomially_moderate = false;  // class P
    bool exp_moderate = true;            // class P_E (all catalog weights)
    bool in_P_E_s = false;               // for the queried s
    std::string label;                   // "P", "P_E"
};
WeightClassReport class_of(const Weight& w, double s);

// Numeric blow-up profile backing negative P_{E,s} answers: for growing
// boxes, sup over sampled x, y of w(x+y) / (w(x) e^{r |y|^{1/s}}).  Bounded
// profiles corroborate membership, growing ones a counterexample.
std::vector<double> pes_ratio_profile(const Weight& w, double s, double r,
                                      const std::vector<double>& boxes, double step = 0.5);

// Grid check of w02(x) <= C * w01(x) * w0(x): measures the smallest constant
// on [-box, box]^dim and flags unboundedness by comparing against the half
// box (a genuine deficit grows with the box; a bounded ratio stabilizes).
struct WeightPairReport {
    bool bounded = false;
    double constant = 0.0;     // sup ratio on the full box
    double growth = 0.0;       // sup on full box / sup on half box
};
WeightPairReport check_thm_weight_pair(const Weight& w02, const Weight& w01, const Weight& w0,
                                       double box = 8.0, double step = 0.25);

}  // namespace modspace
