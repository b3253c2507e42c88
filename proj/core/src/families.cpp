#include "twist/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace twist {

std::optional<Rational> LinearFractional::eval(const Rational& h) const {
    const Rational den = c * h + d;
    if (den == 0) return std::nullopt;
    Rational v = (a * h + b) / den;
    return v;
}

std::string LinearFractional::text() const {
    std::string num;
    if (a == 0) {
        num = to_string(b);
    } else {
        if (a == -1) num = "-h";
        else if (a == 1) num = "h";
        else num = to_string(a) + "h";
        if (b > 0) num += "+" + to_string(b);
        else if (b < 0) num += to_string(b);
    }
    if (c == 0 && d == 1) return num;
    std::string den;
    if (c == 0) {
        den = to_string(d);
    } else {
        den = "(";
        if (c == -1) den += "-h";
        else if (c == 1) den += "h";
        else den += to_string(c) + "h";
        if (d > 0) den += "+" + to_string(d);
        else if (d < 0) den += to_string(d);
        den += ")";
    }
    if (a != 0 && b != 0) num = "(" + num + ")";
    return num + "/" + den;
}

namespace {

LinearFractional lf(long a, long b, long c, long d) {
    return LinearFractional{Integer(a), Integer(b), Integer(c), Integer(d)};
}

std::vector<FamilyRow> make_catalog() {
    const LinearFractional t16 = lf(2, 2, 0, 1);  // 2h+2, rows 1-6
    const LinearFractional z16 = lf(1, 2, 0, 1);  // h+2
    const LinearFractional t78 = lf(2, 3, 0, 1);  // 2h+3, rows 7-8
    const LinearFractional z78 = lf(1, 3, 0, 1);  // h+3
    // Each m is pinned by the row's roots: m = (x+h)(y+h)/(2ht(z-h)), so
    // row8 carries 15h/(8h+12), the unique m whose quadratic has roots
    // {7h/2, 4h} (gamma = 15h/2, beta = 14h^2, discriminant (h/2)^2).
    return {
        {"row1", t16, lf(6, 0, 1, 1), lf(5, 0, 0, 1), lf(7, 0, 0, 1), z16},
        {"row2", t16, lf(15, 0, 2, 2), lf(4, 0, 0, 1), lf(11, 0, 0, 1), z16},
        {"row3", t16, lf(28, 0, 3, 3), lf(11, 0, 0, 3), lf(15, 0, 0, 1), z16},
        {"row4", t16, lf(35, 0, 6, 6), lf(17, 0, 0, 3), lf(6, 0, 0, 1), z16},
        {"row5", t16, lf(45, 0, 4, 4), lf(7, 0, 0, 2), lf(19, 0, 0, 1), z16},
        {"row6", t16, lf(20, 0, 3, 3), lf(13, 0, 0, 3), lf(9, 0, 0, 1), z16},
        {"row7", t78, lf(4, 0, 2, 3), lf(3, 0, 0, 1), lf(5, 0, 0, 1), z78},
        {"row8", t78, lf(15, 0, 8, 12), lf(7, 0, 0, 2), lf(4, 0, 0, 1), z78},
    };
}

}  // namespace

const std::vector<FamilyRow>& catalog() {
    static const std::vector<FamilyRow> rows = make_catalog();
    return rows;
}

const FamilyRow* find_row(std::string_view name) {
    std::string_view target = name;
    if (name == "u1") target = "row1";
    else if (name == "u2") target = "row7";
    for (const FamilyRow& row : catalog())
        if (row.name == target) return &row;
    return nullptr;
}

namespace {

Rational eval_entry(const LinearFractional& fn, const Rational& h,
                    const char* entry) {
    const std::optional<Rational> v = fn.eval(h);
    if (!v)
        throw std::domain_error(std::string("family: pole in ") + entry +
                                " at h=" + to_string(h));
    if (*v == 0)
        throw std::domain_error(std::string("family: ") + entry +
                                " vanishes at h=" + to_string(h));
    return *v;
}

}  // namespace

std::pair<SeedParams, SolutionTuple> eval_at(const FamilyRow& row,
                                             const Rational& h) {
    if (h == 0) throw std::domain_error("family: h is zero");
    const Rational t = eval_entry(row.t_fn, h, "t");
    const Rational m = eval_entry(row.m_fn, h, "m");
    const Rational x = eval_entry(row.x_fn, h, "x");
    const Rational y = eval_entry(row.y_fn, h, "y");
    const Rational z = eval_entry(row.z_fn, h, "z");
    if (z == h || z == -h)
        throw std::domain_error("family: z equals +-h at h=" + to_string(h));
    return {SeedParams(m, t, h, z), SolutionTuple{t, h, x, y, z}};
}

RowValidation validate_row(const FamilyRow& row, long h_min, long h_max) {
    if (h_min > h_max) throw std::domain_error("validate_row: empty range");
    RowValidation rep;
    for (long h = h_min; h <= h_max; ++h) {
        std::optional<std::pair<SeedParams, SolutionTuple>> inst;
        try {
            inst = eval_at(row, make_rational(h));
        } catch (const std::domain_error&) {
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        const ConstructionOutcome out = construct(inst->first);
        const RationalPair* pair = std::get_if<RationalPair>(&out);
        Rational cx = inst->second.x, cy = inst->second.y;
        if (cx > cy) std::swap(cx, cy);
        if (!pair || pair->x != cx || pair->y != cy ||
            !verify_exact(inst->second).holds)
            rep.failed_h.push_back(h);
    }
    return rep;
}

}  // namespace twist
