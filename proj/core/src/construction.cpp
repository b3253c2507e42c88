#include "twist/construction.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace twist {

SeedParams::SeedParams(Rational m_, Rational t_, Rational h_, Rational z_)
    : m(std::move(m_)), t(std::move(t_)), h(std::move(h_)), z(std::move(z_)) {
    if (m == 0) throw std::domain_error("seed: m is zero");
    if (t == 0) throw std::domain_error("seed: t is zero");
    if (h == 0) throw std::domain_error("seed: h is zero");
    if (z == 0) throw std::domain_error("seed: z is zero");
    if (z == h) throw std::domain_error("seed: z equals h");
    if (z == -h) throw std::domain_error("seed: z equals -h");
}

GammaBeta gamma_beta(const SeedParams& s) {
    const Rational zmh = s.z - s.h;
    const Rational zph = s.z + s.h;
    GammaBeta gb;
    gb.gamma = s.m * s.t * zmh - s.m * zph;
    gb.beta = s.h * s.m * s.t * zmh + s.h * s.m * zph - s.h * s.h;
    return gb;
}

ConditionsReport conditions_hold(const SeedParams& s) {
    ConditionsReport rep;
    rep.gb = gamma_beta(s);
    rep.discriminant = rep.gb.gamma * rep.gb.gamma - 4 * rep.gb.beta;
    rep.positivity_value = (s.h * s.h + s.h * rep.gb.gamma + rep.gb.beta) *
                           rep.gb.beta * (1 / s.h + 1 / s.z);
    rep.discriminant_ok = rep.discriminant >= 0;
    rep.positivity_ok = rep.positivity_value > 0;
    return rep;
}

ConstructionOutcome construct(const SeedParams& s) {
    const ConditionsReport rep = conditions_hold(s);
    if (!rep.discriminant_ok)
        return RejectedDiscriminant{rep.gb, rep.discriminant};
    if (!rep.positivity_ok)
        return RejectedPositivity{rep.gb, rep.positivity_value};
    const std::optional<Rational> root = rational_sqrt_exact(rep.discriminant);
    if (!root) return RealIrrational{rep.gb, rep.discriminant};

    RationalPair pair;
    pair.x = (rep.gb.gamma - *root) / 2;
    pair.y = (rep.gb.gamma + *root) / 2;
    pair.tuple = SolutionTuple{s.t, s.h, pair.x, pair.y, s.z};
    assert(verify_exact(pair.tuple).holds);
    return pair;
}

Rational recover_m(const SolutionTuple& s) {
    if (s.t == 0) throw std::domain_error("recover_m: t is zero");
    if (s.h == 0) throw std::domain_error("recover_m: h is zero");
    if (s.z == s.h) throw std::domain_error("recover_m: z equals h");
    return (s.x + s.h) * (s.y + s.h) / (2 * s.h * s.t * (s.z - s.h));
}

std::optional<Rational> solve_for_y(const Rational& t, const Rational& h,
                                    const Rational& z, const Rational& x) {
    if (h == 0) throw std::domain_error("solve_for_y: h is zero");
    if (x == 0) throw std::domain_error("solve_for_y: x is zero");
    if (z == 0) throw std::domain_error("solve_for_y: z is zero");
    if (z == h || z == -h)
        throw std::domain_error("solve_for_y: z equals h or -h");
    if (x == h || x == -h)
        throw std::domain_error("solve_for_y: x equals h or -h");

    const Rational R = t * (z - h) / (z + h);
    const Rational den = x * (1 - R) + h * (1 + R);
    if (den == 0) return std::nullopt;
    return -h * (x * (1 + R) + h * (1 - R)) / den;
}

}  // namespace twist
