#include <doctest.h>

#include <stdexcept>
#include <variant>

#include "support.hpp"
#include "twist/construction.hpp"
#include "twist/families.hpp"
#include "twist/identity.hpp"
#include "twist/rational.hpp"

using twist::FamilyRow;
using twist::LinearFractional;
using twist::Rational;
using twist::make_rational;

namespace {

bool lf_equals(const LinearFractional& f, long a, long b, long c, long d) {
    return f.a == a && f.b == b && f.c == c && f.d == d;
}

}  // namespace

TEST_CASE("catalog shape and shared columns") {
    const auto& rows = twist::catalog();
    REQUIRE(rows.size() == 8);
    for (int i = 0; i < 8; ++i) {
        CHECK(rows[i].name == "row" + std::to_string(i + 1));
    }
    // Rows 1-6: t = 2h+2, z = h+2. Rows 7-8: t = 2h+3, z = h+3.
    for (int i = 0; i < 6; ++i) {
        CHECK(lf_equals(rows[i].t_fn, 2, 2, 0, 1));
        CHECK(lf_equals(rows[i].z_fn, 1, 2, 0, 1));
    }
    for (int i = 6; i < 8; ++i) {
        CHECK(lf_equals(rows[i].t_fn, 2, 3, 0, 1));
        CHECK(lf_equals(rows[i].z_fn, 1, 3, 0, 1));
    }
}

TEST_CASE("catalog frozen coefficients") {
    const auto& rows = twist::catalog();
    CHECK(lf_equals(rows[0].m_fn, 6, 0, 1, 1));    // 6h/(h+1)
    CHECK(lf_equals(rows[0].x_fn, 5, 0, 0, 1));    // 5h
    CHECK(lf_equals(rows[0].y_fn, 7, 0, 0, 1));    // 7h
    CHECK(lf_equals(rows[1].m_fn, 15, 0, 2, 2));   // 15h/(2h+2)
    CHECK(lf_equals(rows[1].x_fn, 4, 0, 0, 1));
    CHECK(lf_equals(rows[1].y_fn, 11, 0, 0, 1));
    CHECK(lf_equals(rows[2].m_fn, 28, 0, 3, 3));
    CHECK(lf_equals(rows[2].x_fn, 11, 0, 0, 3));   // 11h/3
    CHECK(lf_equals(rows[2].y_fn, 15, 0, 0, 1));
    CHECK(lf_equals(rows[3].m_fn, 35, 0, 6, 6));
    CHECK(lf_equals(rows[3].x_fn, 17, 0, 0, 3));
    CHECK(lf_equals(rows[3].y_fn, 6, 0, 0, 1));
    CHECK(lf_equals(rows[4].m_fn, 45, 0, 4, 4));
    CHECK(lf_equals(rows[4].x_fn, 7, 0, 0, 2));    // 7h/2
    CHECK(lf_equals(rows[4].y_fn, 19, 0, 0, 1));
    CHECK(lf_equals(rows[5].m_fn, 20, 0, 3, 3));
    CHECK(lf_equals(rows[5].x_fn, 13, 0, 0, 3));
    CHECK(lf_equals(rows[5].y_fn, 9, 0, 0, 1));
    CHECK(lf_equals(rows[6].m_fn, 4, 0, 2, 3));    // 4h/(2h+3)
    CHECK(lf_equals(rows[6].x_fn, 3, 0, 0, 1));
    CHECK(lf_equals(rows[6].y_fn, 5, 0, 0, 1));
    CHECK(lf_equals(rows[7].m_fn, 15, 0, 8, 12));  // 15h/(8h+12)
    CHECK(lf_equals(rows[7].x_fn, 7, 0, 0, 2));
    CHECK(lf_equals(rows[7].y_fn, 4, 0, 0, 1));
}

TEST_CASE("every row's m is the one its roots demand") {
    // recover_m inverts the construction, so the catalog is self-checking:
    // for each row and many h, m(h) must equal recover_m of the claimed
    // tuple. A transcription slip in any column breaks this.
    for (const auto& row : twist::catalog()) {
        for (long h = 1; h <= 20; ++h) {
            auto [seed, tuple] = twist::eval_at(row, make_rational(h));
            CHECK(twist::recover_m(tuple) == seed.m);
        }
    }
}

TEST_CASE("linear fractional evaluation and poles") {
    LinearFractional f{twist::Integer(6), twist::Integer(0), twist::Integer(1),
                       twist::Integer(1)};  // 6h/(h+1)
    auto v = f.eval(make_rational(3));
    REQUIRE(v.has_value());
    CHECK(*v == make_rational(18, 4));  // 9/2
    CHECK(f.eval(make_rational(-1)) == std::nullopt);  // pole

    LinearFractional pole2{twist::Integer(1), twist::Integer(0),
                           twist::Integer(1), twist::Integer(-2)};
    CHECK(pole2.eval(make_rational(2)) == std::nullopt);
    CHECK(pole2.eval(make_rational(3)).has_value());
}

TEST_CASE("linear fractional text forms") {
    const auto& rows = twist::catalog();
    CHECK(rows[0].m_fn.text() == "6h/(h+1)");
    CHECK(rows[0].t_fn.text() == "2h+2");
    CHECK(rows[0].x_fn.text() == "5h");
    CHECK(rows[6].z_fn.text() == "h+3");
    CHECK(rows[4].x_fn.text() == "7h/2");
    CHECK(rows[7].m_fn.text() == "15h/(8h+12)");
    CHECK(LinearFractional{twist::Integer(1), twist::Integer(0),
                           twist::Integer(0), twist::Integer(1)}
              .text() == "h");
}

TEST_CASE("find_row and aliases") {
    const FamilyRow* r = twist::find_row("row1");
    REQUIRE(r != nullptr);
    CHECK(r->name == "row1");
    r = twist::find_row("u1");
    REQUIRE(r != nullptr);
    CHECK(r->name == "row1");
    r = twist::find_row("u2");
    REQUIRE(r != nullptr);
    CHECK(r->name == "row7");
    r = twist::find_row("row8");
    REQUIRE(r != nullptr);
    CHECK(r->name == "row8");
    CHECK(twist::find_row("row9") == nullptr);
    CHECK(twist::find_row("u3") == nullptr);
    CHECK(twist::find_row("") == nullptr);
    CHECK(twist::find_row("ROW1") == nullptr);  // names are case-sensitive
}

TEST_CASE("eval_at frozen instantiations") {
    const auto& rows = twist::catalog();

    auto [seed1, tuple1] = twist::eval_at(rows[0], make_rational(3));
    CHECK(seed1.m == make_rational(9, 2));
    CHECK(seed1.t == 8);
    CHECK(seed1.h == 3);
    CHECK(seed1.z == 5);
    CHECK(tuple1 == twist::SolutionTuple{make_rational(8), make_rational(3),
                                         make_rational(15), make_rational(21),
                                         make_rational(5)});
    auto rep1 = twist::verify_exact(tuple1);
    CHECK(rep1.holds);
    CHECK(twist::canonicalize(tuple1) ==
          twist::SolutionTuple{make_rational(8), make_rational(3),
                               make_rational(5), make_rational(15),
                               make_rational(21)});

    auto [seed7, tuple7] = twist::eval_at(rows[6], make_rational(1));
    CHECK(seed7.m == make_rational(4, 5));
    CHECK(tuple7 == twist::SolutionTuple{make_rational(5), make_rational(1),
                                         make_rational(3), make_rational(5),
                                         make_rational(4)});
    auto rep7 = twist::verify_exact(tuple7);
    CHECK(rep7.holds);
    CHECK(rep7.lhs_squared == 4);
    CHECK(rep7.rhs_g == 2);

    auto [seed8, tuple8] = twist::eval_at(rows[7], make_rational(2));
    CHECK(seed8.m == make_rational(15, 14));
    CHECK(tuple8 == twist::SolutionTuple{make_rational(7), make_rational(2),
                                         make_rational(7), make_rational(8),
                                         make_rational(5)});
    auto rep8 = twist::verify_exact(tuple8);
    CHECK(rep8.holds);
    CHECK(rep8.lhs_squared == make_rational(81, 1024));
    CHECK(rep8.rhs_g == make_rational(9, 32));
}

TEST_CASE("eval_at works at rational h") {
    const auto& rows = twist::catalog();
    auto [seed, tuple] = twist::eval_at(rows[0], make_rational(1, 2));
    CHECK(seed.t == 3);
    CHECK(tuple.x == make_rational(5, 2));
    CHECK(tuple.y == make_rational(7, 2));
    CHECK(tuple.z == make_rational(5, 2));
    CHECK(twist::verify_exact(tuple).holds);
}

TEST_CASE("eval_at rejects undefined points") {
    const auto& rows = twist::catalog();
    CHECK_THROWS_AS(twist::eval_at(rows[0], make_rational(0)),
                    std::domain_error);
    // h = -1 is the pole of row1's m.
    CHECK_THROWS_AS(twist::eval_at(rows[0], make_rational(-1)),
                    std::domain_error);
    // h = -2 makes row1's z vanish.
    CHECK_THROWS_AS(twist::eval_at(rows[0], make_rational(-2)),
                    std::domain_error);
    // h = -3/2 is the pole of row7's m.
    CHECK_THROWS_AS(twist::eval_at(rows[6], make_rational(-3, 2)),
                    std::domain_error);

    // A synthetic row whose z lands on +-h must be rejected too.
    FamilyRow bad{"synthetic",
                  {twist::Integer(2), twist::Integer(2), twist::Integer(0),
                   twist::Integer(1)},
                  {twist::Integer(6), twist::Integer(0), twist::Integer(1),
                   twist::Integer(1)},
                  {twist::Integer(5), twist::Integer(0), twist::Integer(0),
                   twist::Integer(1)},
                  {twist::Integer(7), twist::Integer(0), twist::Integer(0),
                   twist::Integer(1)},
                  {twist::Integer(1), twist::Integer(0), twist::Integer(0),
                   twist::Integer(1)}};  // z = h
    CHECK_THROWS_AS(twist::eval_at(bad, make_rational(4)), std::domain_error);
}

TEST_CASE("all rows validate over h in [1, 100]") {
    for (const auto& row : twist::catalog()) {
        auto val = twist::validate_row(row, 1, 100);
        INFO(row.name);
        CHECK(val.ok());
        CHECK(val.checked == 100);
        CHECK(val.skipped == 0);  // no catalog row has a pole at positive h
    }
    CHECK_THROWS_AS(twist::validate_row(twist::catalog()[0], 5, 4),
                    std::domain_error);
}

TEST_CASE("row1 discriminant is the perfect square (2h)^2") {
    const auto& row1 = twist::catalog()[0];
    for (long h = 1; h <= 100; ++h) {
        auto [seed, tuple] = twist::eval_at(row1, make_rational(h));
        auto cond = twist::conditions_hold(seed);
        CHECK(cond.discriminant == make_rational(4 * h * h));
        CHECK(cond.discriminant_ok);
        CHECK(cond.positivity_ok);
    }
}

TEST_CASE("integrality pattern of the tuples over h in [1, 60]") {
    auto integral = [](const twist::SolutionTuple& s) {
        return s.t.get_den() == 1 && s.x.get_den() == 1 &&
               s.y.get_den() == 1 && s.z.get_den() == 1;
    };
    const auto& rows = twist::catalog();
    for (long h = 1; h <= 60; ++h) {
        auto at = [&](int idx) {
            auto [seed, tuple] = twist::eval_at(rows[idx], make_rational(h));
            return integral(tuple);
        };
        // Rows 1, 2, 7 are integral at every h; 3, 4, 6 need 3 | h;
        // 5 and 8 need 2 | h.
        CHECK(at(0));
        CHECK(at(1));
        CHECK(at(6));
        CHECK(at(2) == (h % 3 == 0));
        CHECK(at(3) == (h % 3 == 0));
        CHECK(at(5) == (h % 3 == 0));
        CHECK(at(4) == (h % 2 == 0));
        CHECK(at(7) == (h % 2 == 0));
    }
}
