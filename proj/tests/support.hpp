#pragma once

// Shared helpers for the test binaries: deterministic random generators for
// rationals / seeds / verified tuples, and a tiny subprocess runner for the
// CLI golden tests. Everything is seeded explicitly so failures reproduce.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "twist/construction.hpp"
#include "twist/identity.hpp"
#include "twist/rational.hpp"

namespace testsupport {

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

// Uniform rational with numerator in [num_lo, num_hi] and denominator in
// [1, den_hi], reduced. Zero is possible when the numerator range allows it.
inline twist::Rational random_rational(std::mt19937_64& g, long num_lo,
                                       long num_hi, long den_hi) {
    std::uniform_int_distribution<long> num(num_lo, num_hi);
    std::uniform_int_distribution<long> den(1, den_hi);
    return twist::make_rational(num(g), den(g));
}

inline twist::Rational random_nonzero(std::mt19937_64& g, long mag,
                                      long den_hi) {
    for (;;) {
        twist::Rational r = random_rational(g, -mag, mag, den_hi);
        if (r != 0) return r;
    }
}

inline twist::Rational random_positive(std::mt19937_64& g, long mag,
                                       long den_hi) {
    std::uniform_int_distribution<long> num(1, mag);
    std::uniform_int_distribution<long> den(1, den_hi);
    return twist::make_rational(num(g), den(g));
}

// Nonzero rational distinct from both h and -h, fit for an x/y/z slot.
inline twist::Rational random_slot(std::mt19937_64& g, const twist::Rational& h,
                                   long mag, long den_hi) {
    for (;;) {
        twist::Rational v = random_nonzero(g, mag, den_hi);
        if (v != h && v != -h) return v;
    }
}

// Random tuple satisfying f^2 = g^2 by construction: pick h,x,y,z freely and
// set t = (x+h)(y+h)(z+h) / ((x-h)(y-h)(z-h)), the unique t completing the
// squared identity. Roughly half the draws have g > 0 and verify; the rest
// return nullopt (they are still useful as sign-failure specimens).
inline std::optional<twist::SolutionTuple> random_solution_attempt(
    std::mt19937_64& g, long mag = 9, long den_hi = 3) {
    using twist::Rational;
    Rational h = random_nonzero(g, mag, den_hi);
    Rational x = random_slot(g, h, mag, den_hi);
    Rational y = random_slot(g, h, mag, den_hi);
    Rational z = random_slot(g, h, mag, den_hi);
    Rational t = ((x + h) * (y + h) * (z + h)) / ((x - h) * (y - h) * (z - h));
    twist::SolutionTuple s{t, h, x, y, z};
    if (twist::verify_exact(s).holds) return s;
    return std::nullopt;
}

// Always returns a verified tuple (retries draws as needed).
inline twist::SolutionTuple random_verified_tuple(std::mt19937_64& g,
                                                  long mag = 9,
                                                  long den_hi = 3) {
    for (;;) {
        if (auto s = random_solution_attempt(g, mag, den_hi)) return *s;
    }
}

// ---------------------------------------------------------------------------
// Subprocess support for CLI golden tests.

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs `cmd` through /bin/sh with stdout and stderr captured separately.
inline CommandResult run_command(const std::string& cmd) {
    static int counter = 0;
    const std::string base = "/tmp/twist_test_" + std::to_string(getpid()) +
                             "_" + std::to_string(counter++);
    const std::string out_path = base + ".out";
    const std::string err_path = base + ".err";
    const std::string full = cmd + " >" + out_path + " 2>" + err_path;
    const int rc = std::system(full.c_str());
    CommandResult res;
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    res.out = slurp_file(out_path);
    res.err = slurp_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return res;
}

// Path to the twistid binary, supplied by the test harness.
inline std::string cli_path() {
    if (const char* p = std::getenv("TWISTID_BIN")) return std::string(p);
    std::fprintf(stderr, "TWISTID_BIN is not set; cannot run CLI tests\n");
    std::abort();
}

// Shell-quotes an argument (single-quote wrapping, the POSIX way).
inline std::string shq(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += "'";
    return out;
}

}  // namespace testsupport
