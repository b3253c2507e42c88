#pragma once

#include <optional>
#include <variant>

#include "twist/identity.hpp"
#include "twist/rational.hpp"

namespace twist {

// Seed quadruple (m, t, h, z) from which x and y arise as the roots of
// X^2 - gamma*X + beta. The constructor enforces m,t,h,z != 0 and z != +-h
// (std::domain_error otherwise); every downstream formula divides by one of
// those quantities.
struct SeedParams {
    SeedParams(Rational m_, Rational t_, Rational h_, Rational z_);
    Rational m, t, h, z;
};

struct GammaBeta {
    Rational gamma, beta;
};

// gamma = m t (z-h) - m (z+h);  beta = h m t (z-h) + h m (z+h) - h^2.
GammaBeta gamma_beta(const SeedParams& seed);

struct ConditionsReport {
    GammaBeta gb;
    Rational discriminant;      // gamma^2 - 4 beta
    Rational positivity_value;  // (h^2 + h*gamma + beta) * beta * (1/h + 1/z)
    bool discriminant_ok = false;  // discriminant >= 0
    bool positivity_ok = false;    // positivity_value > 0
};

ConditionsReport conditions_hold(const SeedParams& seed);

// The quadratic has no real roots.
struct RejectedDiscriminant {
    GammaBeta gb;
    Rational discriminant;
};

// Real roots exist but the tuple they would complete has g <= 0.
struct RejectedPositivity {
    GammaBeta gb;
    Rational positivity_value;
};

// Both conditions hold but the discriminant is not a rational square: a
// genuine real solution whose x,y we do not materialize.
struct RealIrrational {
    GammaBeta gb;
    Rational discriminant;
};

// x <= y; tuple = (t, h, x, y, z) and always passes verify_exact.
struct RationalPair {
    Rational x, y;
    SolutionTuple tuple;
};

using ConstructionOutcome = std::variant<RejectedDiscriminant,
                                         RejectedPositivity,
                                         RealIrrational,
                                         RationalPair>;

// Checks the discriminant first, then positivity, then rationality of the
// discriminant's square root; never throws.
ConstructionOutcome construct(const SeedParams& seed);

// Inverts xy + h(x+y) + h^2 = 2 h m t (z-h):
//   m = (x+h)(y+h) / (2 h t (z-h)), with the tuple's z slot designating z.
// For a verified tuple the companion relation (x-h)(y-h) / (2 h (z+h))
// yields the same m. t = 0, h = 0, or z = h raise std::domain_error.
Rational recover_m(const SolutionTuple& s);

// Eliminates y from t(z-h)/(z+h) = (x+h)(y+h)/((x-h)(y-h)): with
// R = t(z-h)/(z+h),
//   y = -h * (x(1+R) + h(1-R)) / (x(1-R) + h(1+R)),
// the unique y completing the relation, or nullopt when the denominator
// vanishes (no finite y). Requires h,x,z != 0, z != +-h, x != +-h
// (std::domain_error otherwise). The relation is the identity squared, so a
// returned y still needs verify_exact to confirm the sign of g.
std::optional<Rational> solve_for_y(const Rational& t, const Rational& h,
                                    const Rational& z, const Rational& x);

}  // namespace twist
