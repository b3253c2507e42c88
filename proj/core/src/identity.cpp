#include "twist/identity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace twist {

bool operator==(const SolutionTuple& a, const SolutionTuple& b) {
    return a.t == b.t && a.h == b.h && a.x == b.x && a.y == b.y && a.z == b.z;
}

bool tuple_less(const SolutionTuple& a, const SolutionTuple& b) {
    if (int c = cmp(a.t, b.t)) return c < 0;
    if (int c = cmp(a.h, b.h)) return c < 0;
    if (int c = cmp(a.x, b.x)) return c < 0;
    if (int c = cmp(a.y, b.y)) return c < 0;
    return cmp(a.z, b.z) < 0;
}

std::string_view to_string(FailureReason r) {
    switch (r) {
        case FailureReason::TrivialZero: return "trivial-zero";
        case FailureReason::EqualsPlusMinusH: return "equals-plus-minus-h";
        case FailureReason::Sign: return "sign";
        case FailureReason::ValueMismatch: return "value-mismatch";
    }
    throw std::logic_error("unknown FailureReason");
}

std::optional<FailureReason> nontriviality_failure(const SolutionTuple& s) {
    if (s.t == 0 || s.h == 0 || s.x == 0 || s.y == 0 || s.z == 0)
        return FailureReason::TrivialZero;
    const Rational neg_h = -s.h;
    for (const Rational* v : {&s.x, &s.y, &s.z})
        if (*v == s.h || *v == neg_h) return FailureReason::EqualsPlusMinusH;
    return std::nullopt;
}

bool is_nontrivial(const SolutionTuple& s) {
    return !nontriviality_failure(s).has_value();
}

namespace {

Rational inv_sq(const Rational& v, const char* name) {
    if (v == 0) throw std::domain_error(std::string(name) + " is zero");
    Rational sq = v * v;
    return 1 / sq;
}

Rational inv(const Rational& v, const char* name) {
    if (v == 0) throw std::domain_error(std::string(name) + " is zero");
    return 1 / v;
}

}  // namespace

Rational lhs_squared(const SolutionTuple& s) {
    const Rational ih2 = inv_sq(s.h, "h");
    return s.t * (ih2 - inv_sq(s.x, "x")) * (ih2 - inv_sq(s.y, "y")) *
           (ih2 - inv_sq(s.z, "z"));
}

Rational rhs_g(const SolutionTuple& s) {
    const Rational ih = inv(s.h, "h");
    return (ih + inv(s.x, "x")) * (ih + inv(s.y, "y")) * (ih + inv(s.z, "z"));
}

VerifyReport verify_exact(const SolutionTuple& s) {
    VerifyReport rep;
    const std::optional<FailureReason> triv = nontriviality_failure(s);
    rep.nontrivial = !triv.has_value();

    const bool computable =
        s.h != 0 && s.x != 0 && s.y != 0 && s.z != 0;
    if (computable) {
        rep.lhs_squared = lhs_squared(s);
        rep.rhs_g = rhs_g(s);
    }

    if (triv) {
        rep.failure_reason = triv;
        return rep;
    }
    if (rep.rhs_g <= 0) {
        rep.failure_reason = FailureReason::Sign;
        return rep;
    }
    if (rep.lhs_squared != rep.rhs_g * rep.rhs_g) {
        rep.failure_reason = FailureReason::ValueMismatch;
        return rep;
    }
    rep.holds = true;
    return rep;
}

bool verify_float(const SolutionTuple& s, double tol) {
    if (!is_nontrivial(s)) throw std::domain_error("trivial tuple");
    const Rational f2 = lhs_squared(s);
    if (f2 < 0) throw std::domain_error("negative radicand");
    const double lhs = std::sqrt(to_double(f2));
    const double rhs = to_double(rhs_g(s));
    return std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(rhs));
}

SolutionTuple canonicalize(const SolutionTuple& s) {
    if (!is_nontrivial(s)) throw std::domain_error("trivial tuple");

    SolutionTuple out = s;
    if (out.x > out.y) std::swap(out.x, out.y);
    if (out.y > out.z) std::swap(out.y, out.z);
    if (out.x > out.y) std::swap(out.x, out.y);

    // Scale (h,x,y,z) by L/G: L clears denominators, G strips the common
    // integer factor. Both are positive, so signs and the identity survive.
    Integer L = lcm(lcm(out.h.get_den(), out.x.get_den()),
                    lcm(out.y.get_den(), out.z.get_den()));
    Integer G = gcd(gcd(Integer(out.h.get_num() * (L / out.h.get_den())),
                        Integer(out.x.get_num() * (L / out.x.get_den()))),
                    gcd(Integer(out.y.get_num() * (L / out.y.get_den())),
                        Integer(out.z.get_num() * (L / out.z.get_den()))));
    Rational k = make_rational(L, G);
    out.h *= k;
    out.x *= k;
    out.y *= k;
    out.z *= k;
    return out;
}

}  // namespace twist
