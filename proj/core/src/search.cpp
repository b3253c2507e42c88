#include "twist/search.hpp"

#include <atomic>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace twist {

void IntegralBounds::validate() const {
    if (t_min < 1) throw std::domain_error("bounds: t_min must be >= 1");
    if (t_max < t_min) throw std::domain_error("bounds: t_max < t_min");
    if (h_max < 1) throw std::domain_error("bounds: h_max must be >= 1");
    if (v_max < 1) throw std::domain_error("bounds: v_max must be >= 1");
}

void SeedGrid::validate() const {
    if (h_values.empty()) throw std::domain_error("grid: no h values");
    if (t_max < t_min) throw std::domain_error("grid: empty t range");
    if (z_offset_max < z_offset_min)
        throw std::domain_error("grid: empty z-offset range");
    if (m_numerator_max < 1)
        throw std::domain_error("grid: m numerator cap must be >= 1");
    if (m_denominator_max < 1)
        throw std::domain_error("grid: m denominator cap must be >= 1");
}

SearchCounters& SearchCounters::operator+=(const SearchCounters& o) {
    candidates += o.candidates;
    verified += o.verified;
    rejected_trivial += o.rejected_trivial;
    rejected_sign += o.rejected_sign;
    rejected_value += o.rejected_value;
    no_finite_y += o.no_finite_y;
    y_out_of_range += o.y_out_of_range;
    invalid_seeds += o.invalid_seeds;
    rejected_discriminant += o.rejected_discriminant;
    rejected_positivity += o.rejected_positivity;
    real_irrational += o.real_irrational;
    return *this;
}

std::string SearchCounters::summary() const {
    std::ostringstream os;
    os << "candidates=" << candidates << " verified=" << verified;
    const std::pair<const char*, std::uint64_t> rest[] = {
        {"trivial", rejected_trivial},
        {"sign", rejected_sign},
        {"value-mismatch", rejected_value},
        {"no-finite-y", no_finite_y},
        {"y-out-of-range", y_out_of_range},
        {"invalid-seeds", invalid_seeds},
        {"rejected-discriminant", rejected_discriminant},
        {"rejected-positivity", rejected_positivity},
        {"real-irrational", real_irrational},
    };
    for (const auto& [name, value] : rest)
        if (value) os << " " << name << "=" << value;
    return os.str();
}

std::string_view to_string(ProvenanceKind k) {
    switch (k) {
        case ProvenanceKind::Naive: return "naive";
        case ProvenanceKind::Fast: return "fast";
        case ProvenanceKind::Parametric: return "parametric";
    }
    throw std::logic_error("unknown ProvenanceKind");
}

namespace {

struct TaskOutput {
    std::vector<FoundSolution> hits;  // discovery order within the task
    SearchCounters counters;
};

// Runs fn(0..task_count-1) across up to `workers` threads. Each task's
// output lands in its own slot, so the merge order (and therefore the final
// result) is independent of scheduling.
template <typename Fn>
std::vector<TaskOutput> run_tasks(std::size_t task_count, int workers,
                                  const Fn& fn) {
    std::vector<TaskOutput> outputs(task_count);
    const std::size_t n_threads =
        std::min<std::size_t>(std::max(workers, 1), std::max<std::size_t>(task_count, 1));
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < task_count; ++i) outputs[i] = fn(i);
        return outputs;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t w = 0; w < n_threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < task_count; i = next++)
                outputs[i] = fn(i);
        });
    }
    for (std::thread& th : pool) th.join();
    return outputs;
}

struct TupleLess {
    bool operator()(const SolutionTuple& a, const SolutionTuple& b) const {
        return tuple_less(a, b);
    }
};

SearchResult merge_tasks(std::vector<TaskOutput> outputs) {
    SearchResult res;
    std::map<SolutionTuple, FoundSolution, TupleLess> unique;
    for (TaskOutput& out : outputs) {
        res.counters += out.counters;
        for (FoundSolution& hit : out.hits)
            unique.emplace(hit.tuple, std::move(hit));  // first hit wins
    }
    res.solutions.reserve(unique.size());
    for (auto& [tuple, hit] : unique) res.solutions.push_back(std::move(hit));
    return res;
}

// Classifies a candidate tuple; canonical verified hits go to out.
void examine(const SolutionTuple& s, ProvenanceKind kind, TaskOutput& out) {
    ++out.counters.candidates;
    const VerifyReport rep = verify_exact(s);
    if (!rep.holds) {
        switch (*rep.failure_reason) {
            case FailureReason::TrivialZero:
            case FailureReason::EqualsPlusMinusH:
                ++out.counters.rejected_trivial;
                break;
            case FailureReason::Sign: ++out.counters.rejected_sign; break;
            case FailureReason::ValueMismatch:
                ++out.counters.rejected_value;
                break;
        }
        return;
    }
    ++out.counters.verified;
    FoundSolution hit;
    hit.tuple = canonicalize(s);
    hit.report = verify_exact(hit.tuple);  // soundness re-check at insertion
    hit.provenance.kind = kind;
    assert(hit.report.holds);
    if (hit.report.holds) out.hits.push_back(std::move(hit));
}

// The (t,h) pairs in scan order; tasks for both integral searches.
std::vector<std::pair<std::int64_t, std::int64_t>> integral_tasks(
    const IntegralBounds& b) {
    std::vector<std::pair<std::int64_t, std::int64_t>> tasks;
    tasks.reserve(static_cast<std::size_t>(b.t_max - b.t_min + 1) *
                  static_cast<std::size_t>(b.h_max));
    for (std::int64_t t = b.t_min; t <= b.t_max; ++t)
        for (std::int64_t h = 1; h <= b.h_max; ++h) tasks.emplace_back(t, h);
    return tasks;
}

// First value of the enumeration [-v_max..v_max] \ {0}, or [1..v_max].
std::int64_t first_value(const IntegralBounds& b) {
    return b.positive_only ? 1 : -b.v_max;
}

// Next value, skipping zero.
std::int64_t next_value(std::int64_t v) { return v == -1 ? 1 : v + 1; }

TaskOutput naive_task(const IntegralBounds& b, std::int64_t t,
                      std::int64_t h) {
    TaskOutput out;
    const Rational rt = make_rational(t);
    const Rational rh = make_rational(h);
    for (std::int64_t x = first_value(b); x <= b.v_max; x = next_value(x)) {
        const Rational rx = make_rational(x);
        for (std::int64_t y = x; y <= b.v_max; y = next_value(y)) {
            const Rational ry = make_rational(y);
            for (std::int64_t z = y; z <= b.v_max; z = next_value(z))
                examine(SolutionTuple{rt, rh, rx, ry, make_rational(z)},
                        ProvenanceKind::Naive, out);
        }
    }
    return out;
}

TaskOutput fast_task(const IntegralBounds& b, std::int64_t t,
                     std::int64_t h) {
    TaskOutput out;
    const Rational rt = make_rational(t);
    const Rational rh = make_rational(h);
    for (std::int64_t z = first_value(b); z <= b.v_max; z = next_value(z)) {
        if (z == h || z == -h) continue;
        const Rational rz = make_rational(z);
        // x <= z suffices: a solution sorted as x <= y <= z is recovered
        // from the slot pair (min, max), and y is the unique completion.
        for (std::int64_t x = first_value(b); x <= z; x = next_value(x)) {
            if (x == h || x == -h) continue;
            ++out.counters.candidates;
            const std::optional<Rational> y =
                solve_for_y(rt, rh, rz, make_rational(x));
            if (!y) {
                ++out.counters.no_finite_y;
                continue;
            }
            if (y->get_den() != 1) {
                ++out.counters.y_out_of_range;
                continue;
            }
            const Integer& yi = y->get_num();
            const bool in_range = b.positive_only
                                      ? (yi >= 1 && yi <= b.v_max)
                                      : (yi != 0 && abs(yi) <= b.v_max);
            if (!in_range) {
                ++out.counters.y_out_of_range;
                continue;
            }
            const SolutionTuple s{rt, rh, make_rational(x), *y, rz};
            const VerifyReport rep = verify_exact(s);
            if (!rep.holds) {
                // The solved y satisfies f^2 = g^2 by construction, so only
                // the sign or a trivial value can fail here.
                if (rep.failure_reason == FailureReason::Sign)
                    ++out.counters.rejected_sign;
                else
                    ++out.counters.rejected_trivial;
                continue;
            }
            ++out.counters.verified;
            FoundSolution hit;
            hit.tuple = canonicalize(s);
            hit.report = verify_exact(hit.tuple);
            hit.provenance.kind = ProvenanceKind::Fast;
            assert(hit.report.holds);
            if (hit.report.holds) out.hits.push_back(std::move(hit));
        }
    }
    return out;
}

TaskOutput parametric_task(const SeedGrid& g, const Rational& h,
                           std::int64_t t) {
    TaskOutput out;
    const Rational rt = make_rational(t);
    for (std::int64_t off = g.z_offset_min; off <= g.z_offset_max; ++off) {
        const Rational z = h + make_rational(off);
        for (std::int64_t p = 1; p <= g.m_numerator_max; ++p) {
            for (std::int64_t q = 1; q <= g.m_denominator_max; ++q) {
                if (std::gcd(p, q) != 1) continue;  // p/q already seen
                ++out.counters.candidates;
                if (t == 0 || h == 0 || z == 0 || z == h || z == -h) {
                    ++out.counters.invalid_seeds;
                    continue;
                }
                const SeedParams seed(make_rational(p, q), rt, h, z);
                const ConstructionOutcome outcome = construct(seed);
                if (std::holds_alternative<RejectedDiscriminant>(outcome)) {
                    ++out.counters.rejected_discriminant;
                } else if (std::holds_alternative<RejectedPositivity>(outcome)) {
                    ++out.counters.rejected_positivity;
                } else if (std::holds_alternative<RealIrrational>(outcome)) {
                    ++out.counters.real_irrational;
                } else {
                    const RationalPair& pair = std::get<RationalPair>(outcome);
                    ++out.counters.verified;
                    FoundSolution hit;
                    hit.tuple = canonicalize(pair.tuple);
                    hit.report = verify_exact(hit.tuple);
                    hit.provenance.kind = ProvenanceKind::Parametric;
                    hit.provenance.seed = seed;
                    assert(hit.report.holds);
                    if (hit.report.holds) out.hits.push_back(std::move(hit));
                }
            }
        }
    }
    return out;
}

}  // namespace

SearchResult search_integral_naive(const IntegralBounds& b, int workers) {
    b.validate();
    const auto tasks = integral_tasks(b);
    return merge_tasks(run_tasks(tasks.size(), workers, [&](std::size_t i) {
        return naive_task(b, tasks[i].first, tasks[i].second);
    }));
}

SearchResult search_integral_fast(const IntegralBounds& b, int workers) {
    b.validate();
    const auto tasks = integral_tasks(b);
    return merge_tasks(run_tasks(tasks.size(), workers, [&](std::size_t i) {
        return fast_task(b, tasks[i].first, tasks[i].second);
    }));
}

SearchResult search_parametric(const SeedGrid& g, int workers) {
    g.validate();
    std::vector<std::pair<Rational, std::int64_t>> tasks;
    tasks.reserve(g.h_values.size() *
                  static_cast<std::size_t>(g.t_max - g.t_min + 1));
    for (const Rational& h : g.h_values)
        for (std::int64_t t = g.t_min; t <= g.t_max; ++t)
            tasks.emplace_back(h, t);
    return merge_tasks(run_tasks(tasks.size(), workers, [&](std::size_t i) {
        return parametric_task(g, tasks[i].first, tasks[i].second);
    }));
}

}  // namespace twist
