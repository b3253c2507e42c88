#pragma once

#include <optional>
#include <string_view>

#include "twist/rational.hpp"

namespace twist {

// Candidate quintuple for the radical identity
//
//   sqrt(t (1/h^2 - 1/x^2)(1/h^2 - 1/y^2)(1/h^2 - 1/z^2))
//     = (1/h + 1/x)(1/h + 1/y)(1/h + 1/z)
//
// No nontriviality is baked into the type; rejected tuples stay
// representable so searches can classify them.
struct SolutionTuple {
    Rational t, h, x, y, z;
};

bool operator==(const SolutionTuple& a, const SolutionTuple& b);

// Lexicographic on (t, h, x, y, z); the emission order of every search.
bool tuple_less(const SolutionTuple& a, const SolutionTuple& b);

enum class FailureReason { TrivialZero, EqualsPlusMinusH, Sign, ValueMismatch };

std::string_view to_string(FailureReason r);

// A tuple is non-trivial when t,h,x,y,z are all nonzero and none of x,y,z
// equals h or -h, so no factor on either side degenerates. Returns the first
// violated condition, or nullopt when non-trivial.
std::optional<FailureReason> nontriviality_failure(const SolutionTuple& s);
bool is_nontrivial(const SolutionTuple& s);

// t (1/h^2 - 1/x^2)(1/h^2 - 1/y^2)(1/h^2 - 1/z^2), the radicand.
// Any of h,x,y,z zero raises std::domain_error.
Rational lhs_squared(const SolutionTuple& s);

// (1/h + 1/x)(1/h + 1/y)(1/h + 1/z).
// Any of h,x,y,z zero raises std::domain_error.
Rational rhs_g(const SolutionTuple& s);

struct VerifyReport {
    bool nontrivial = false;
    Rational lhs_squared;  // 0 when a zero field makes it uncomputable
    Rational rhs_g;
    bool holds = false;
    std::optional<FailureReason> failure_reason;
};

// Decides the identity without taking any square root: it holds iff the
// tuple is non-trivial, rhs_g > 0, and lhs_squared == rhs_g^2. Nontriviality
// makes every factor of g nonzero, so g > 0 is the exact sign condition.
// Never throws; failures are reported with a reason.
VerifyReport verify_exact(const SolutionTuple& s);

// Binary64 cross-check: |sqrt(lhs_squared) - rhs_g| <= tol * max(1, |rhs_g|)
// evaluated in doubles. Advisory only. Requires a non-trivial tuple with a
// nonnegative radicand; violations raise std::domain_error.
bool verify_float(const SolutionTuple& s, double tol);

// Canonical representative of the solution's equivalence class: sorts
// (x, y, z) ascending, then scales (h, x, y, z) by the unique positive
// rational making them a primitive integer quadruple. t is untouched, and
// the scaling is positive, so the output verifies iff the input does.
// Trivial input raises std::domain_error.
SolutionTuple canonicalize(const SolutionTuple& s);

}  // namespace twist
