#include "twist/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace twist {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Rational> rational_sqrt_exact(const Rational& r) {
    if (r < 0) return std::nullopt;
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    // Lowest terms make this test exact: p/q is a rational square iff both
    // p and q are integer squares.
    if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
    return make_rational(isqrt(num), isqrt(den));
}

double to_double(const Rational& r) {
    // mpq_get_d truncates toward zero with error below one ulp, so the
    // nearest double is either d or the next value away from zero. Compare
    // the candidates exactly (a finite double converts to a rational with no
    // error) and keep the closer one, ties to the even significand.
    double d = mpq_get_d(r.get_mpq_t());
    if (!std::isfinite(d)) return d;

    auto abs_err = [&r](double cand) {
        Rational e = r - Rational(cand);
        if (e < 0) e = -e;
        return e;
    };

    double best = d;
    Rational best_err = abs_err(d);
    const double inf = std::numeric_limits<double>::infinity();
    for (double cand : {std::nextafter(d, -inf), std::nextafter(d, inf)}) {
        if (!std::isfinite(cand)) continue;
        Rational err = abs_err(cand);
        if (err < best_err) {
            best = cand;
            best_err = err;
        } else if (err == best_err && cand != best) {
            // Halfway case: prefer the value whose significand is even.
            int exp_b, exp_c;
            double mb = std::frexp(best, &exp_b);
            double mc = std::frexp(cand, &exp_c);
            long long sb = std::llround(std::ldexp(mb, 53));
            long long sc = std::llround(std::ldexp(mc, 53));
            if ((sc & 1) == 0 && (sb & 1) != 0) best = cand;
        }
    }
    return best;
}

std::optional<Rational> parse_rational(std::string_view text) {
    size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) return std::nullopt;
    size_t den_begin = 0, den_end = 0;
    if (i < text.size()) {
        if (text[i] != '/') return std::nullopt;
        ++i;
        den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) return std::nullopt;
        den_end = i;
    }

    Integer num(std::string(text.substr(0, den_begin == 0 ? text.size() : den_begin - 1)), 10);
    Integer den(1);
    if (den_begin != 0) {
        den = Integer(std::string(text.substr(den_begin, den_end - den_begin)), 10);
        if (den == 0) return std::nullopt;
    }
    return make_rational(num, den);
}

std::string to_string(const Rational& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) {
        s += '/';
        s += r.get_den().get_str();
    }
    return s;
}

std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace twist
