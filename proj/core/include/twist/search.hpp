#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twist/construction.hpp"
#include "twist/identity.hpp"
#include "twist/rational.hpp"

namespace twist {

// Box for the integral searches. Desk scale by design: every bound fits in
// an int64 comfortably, and the naive oracle is only intended for runs of
// up to ~10^7 candidates.
struct IntegralBounds {
    std::int64_t t_min = 1;
    std::int64_t t_max = 1;
    std::int64_t h_max = 1;
    std::int64_t v_max = 1;       // cap on |x|, |y|, |z|
    bool positive_only = true;    // false admits negative x,y,z (never 0)

    void validate() const;  // 1 <= t_min <= t_max, h_max >= 1, v_max >= 1
};

// Seed lattice for the parametric search: every combination of h from
// h_values, t in [t_min,t_max], z = h + offset for offset in
// [z_offset_min,z_offset_max], and m = p/q over reduced fractions with
// 1 <= p <= m_numerator_max, 1 <= q <= m_denominator_max. Combinations
// violating the seed invariants are skipped and counted.
struct SeedGrid {
    std::vector<Rational> h_values;
    std::int64_t t_min = 1;
    std::int64_t t_max = 1;
    std::int64_t z_offset_min = 1;
    std::int64_t z_offset_max = 1;
    std::int64_t m_numerator_max = 1;
    std::int64_t m_denominator_max = 1;

    void validate() const;  // nonempty h_values and ranges, positive m caps
};

struct SearchCounters {
    std::uint64_t candidates = 0;             // tuples or seeds examined
    std::uint64_t verified = 0;               // hits before deduplication
    std::uint64_t rejected_trivial = 0;       // zero field or value in {h,-h}
    std::uint64_t rejected_sign = 0;          // g <= 0
    std::uint64_t rejected_value = 0;         // f^2 != g^2
    std::uint64_t no_finite_y = 0;            // fast: no y completes (t,h,z,x)
    std::uint64_t y_out_of_range = 0;         // fast: y not integral in bounds
    std::uint64_t invalid_seeds = 0;          // parametric: seed invariants
    std::uint64_t rejected_discriminant = 0;  // parametric: disc < 0
    std::uint64_t rejected_positivity = 0;    // parametric: g would be <= 0
    std::uint64_t real_irrational = 0;        // parametric: irrational roots

    SearchCounters& operator+=(const SearchCounters& o);
    std::string summary() const;  // single human-readable line
};

enum class ProvenanceKind { Naive, Fast, Parametric };

std::string_view to_string(ProvenanceKind k);

struct Provenance {
    ProvenanceKind kind = ProvenanceKind::Naive;
    std::optional<SeedParams> seed;  // parametric only: the seed that hit
};

struct FoundSolution {
    SolutionTuple tuple;   // canonical form
    VerifyReport report;   // for the canonical tuple; always holds
    Provenance provenance;
};

// Solutions are unique canonical tuples in lexicographic (t,h,x,y,z) order.
// When duplicates collide, the provenance of the first hit in deterministic
// scan order wins, so results are identical for any worker count.
struct SearchResult {
    std::vector<FoundSolution> solutions;
    SearchCounters counters;
};

// Exhaustive oracle: every t in [t_min,t_max], h in [1,h_max], and
// x <= y <= z with values in [1,v_max] (positive_only) or nonzero values in
// [-v_max,v_max]; each triple goes through verify_exact.
SearchResult search_integral_naive(const IntegralBounds& b, int workers = 1);

// Same answer set as the naive oracle on any common bounds, but iterates
// only (t, h, z, x) with x <= z and solves for the unique completing y.
SearchResult search_integral_fast(const IntegralBounds& b, int workers = 1);

// Runs construct over the whole grid and keeps the rational-pair outcomes.
SearchResult search_parametric(const SeedGrid& g, int workers = 1);

}  // namespace twist
