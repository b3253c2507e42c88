#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace twist {

// Every scalar in the toolkit is an exact arbitrary-precision integer or
// fraction. Rationals are kept canonical at all times: denominator > 0,
// gcd(|num|, den) = 1, zero stored as 0/1. GMP's mpq functions require and
// preserve that form, so the only construction paths that need care are the
// two-argument ones below.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms with a positive denominator.
// den == 0 raises std::domain_error.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// floor(sqrt(n)); n < 0 raises std::domain_error.
Integer isqrt(const Integer& n);

// True iff n >= 0 and isqrt(n)^2 == n.
bool is_perfect_square(const Integer& n);

// Exact square root of a rational, when one exists: present iff r >= 0 and
// both numerator and denominator (lowest terms) are perfect squares. Absent
// covers both "negative" and "irrational".
std::optional<Rational> rational_sqrt_exact(const Rational& r);

// Nearest binary64 value (ties to even). Overflows honestly to +-infinity.
// Display and cross-checking only; no exactness decision may rest on this.
double to_double(const Rational& r);

// Text format used by the CLI and the JSONL records: optional leading '-',
// decimal digits, optionally '/' and a positive decimal denominator
// ("16/9", "-3", "5"). Parsing normalizes to lowest terms.
std::optional<Rational> parse_rational(std::string_view text);

// Lowest terms, "/1" omitted.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

}  // namespace twist
