#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twist/construction.hpp"
#include "twist/identity.hpp"
#include "twist/rational.hpp"

namespace twist {

// h -> (a*h + b)/(c*h + d). Every catalog entry is degree <= 1 over
// degree <= 1 in h, so this one shape encodes them all exactly.
struct LinearFractional {
    Integer a, b, c, d;

    // Value at h, or nullopt at a pole (c*h + d = 0).
    std::optional<Rational> eval(const Rational& h) const;

    // Human form: "6h/(h+1)", "2h+2", "7h/2", "h+3".
    std::string text() const;
};

struct FamilyRow {
    std::string name;  // "row1" .. "row8"
    LinearFractional t_fn, m_fn, x_fn, y_fn, z_fn;
};

// The eight parametric rows, in fixed order. Rows 1-6 share t = 2h+2 and
// z = h+2; rows 7-8 share t = 2h+3 and z = h+3.
const std::vector<FamilyRow>& catalog();

// Lookup by name; "u1" and "u2" alias row1 and row7 (the two named
// identities those rows generate). Null when unknown.
const FamilyRow* find_row(std::string_view name);

// Instantiates the row at h: the seed (m(h), t(h), h, z(h)) and the claimed
// tuple (t(h), h, x(h), y(h), z(h)). A pole or zero among the five entries,
// h = 0, or z(h) = +-h raises std::domain_error naming the offender.
std::pair<SeedParams, SolutionTuple> eval_at(const FamilyRow& row,
                                             const Rational& h);

struct RowValidation {
    long checked = 0;
    long skipped = 0;               // h values where eval_at is undefined
    std::vector<long> failed_h;     // empty iff the row held everywhere
    bool ok() const { return failed_h.empty(); }
};

// For every integer h in [h_min, h_max] where the row is defined: construct
// from the row's seed must return exactly the rational pair {x(h), y(h)} and
// the claimed tuple must verify. Empty range raises std::domain_error.
RowValidation validate_row(const FamilyRow& row, long h_min, long h_max);

}  // namespace twist
