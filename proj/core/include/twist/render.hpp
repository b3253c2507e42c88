#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "twist/identity.hpp"
#include "twist/search.hpp"

namespace twist {

enum class RenderStyle { Plain, Latex, Json };

// "plain" | "latex" | "json" -> style; nullopt otherwise.
std::optional<RenderStyle> parse_style(std::string_view name);

// Renders a tuple in the identity's display shape, fields substituted in
// the order given. The tuple must verify; std::domain_error otherwise.
//   plain: sqrt(8(1/3^2-1/5^2)...) = (1/3+1/5)...
//   latex: \sqrt{8\left(\frac{1}{3^2}-\frac{1}{5^2}\right)...} = ...
//   json:  the JSONL record below
std::string render_identity(const SolutionTuple& s, RenderStyle style);

// One JSONL record, fields in fixed order:
//   {"t":"8","h":"3","x":"5","y":"15","z":"21","holds":true,
//    "lhs_squared":"16384/2480625","rhs_g":"128/1575"}
// A failed report gains a trailing "failure_reason" field.
std::string jsonl_record(const SolutionTuple& s, const VerifyReport& rep);

// Search extension: the base record plus "provenance" and, for parametric
// hits, the "seed" object {"m":..,"t":..,"h":..,"z":..}.
std::string jsonl_record(const FoundSolution& hit);

}  // namespace twist
