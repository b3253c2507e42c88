#include "twist/render.hpp"

#include <sstream>
#include <stdexcept>

namespace twist {

std::optional<RenderStyle> parse_style(std::string_view name) {
    if (name == "plain") return RenderStyle::Plain;
    if (name == "latex") return RenderStyle::Latex;
    if (name == "json") return RenderStyle::Json;
    return std::nullopt;
}

namespace {

std::string render_plain(const std::string& t, const std::string& h,
                         const std::string& x, const std::string& y,
                         const std::string& z) {
    std::ostringstream os;
    os << "sqrt(" << t;
    for (const std::string* v : {&x, &y, &z})
        os << "(1/" << h << "^2-1/" << *v << "^2)";
    os << ") = ";
    for (const std::string* v : {&x, &y, &z})
        os << "(1/" << h << "+1/" << *v << ")";
    return os.str();
}

std::string render_latex(const std::string& t, const std::string& h,
                         const std::string& x, const std::string& y,
                         const std::string& z) {
    std::ostringstream os;
    os << "\\sqrt{" << t;
    for (const std::string* v : {&x, &y, &z})
        os << "\\left(\\frac{1}{" << h << "^2}-\\frac{1}{" << *v
           << "^2}\\right)";
    os << "} = ";
    for (const std::string* v : {&x, &y, &z})
        os << "\\left(\\frac{1}{" << h << "}+\\frac{1}{" << *v << "}\\right)";
    return os.str();
}

}  // namespace

std::string render_identity(const SolutionTuple& s, RenderStyle style) {
    const VerifyReport rep = verify_exact(s);
    if (!rep.holds)
        throw std::domain_error("render: tuple does not verify");
    switch (style) {
        case RenderStyle::Plain:
            return render_plain(to_string(s.t), to_string(s.h),
                                to_string(s.x), to_string(s.y),
                                to_string(s.z));
        case RenderStyle::Latex:
            return render_latex(to_string(s.t), to_string(s.h),
                                to_string(s.x), to_string(s.y),
                                to_string(s.z));
        case RenderStyle::Json: return jsonl_record(s, rep);
    }
    throw std::logic_error("unknown RenderStyle");
}

std::string jsonl_record(const SolutionTuple& s, const VerifyReport& rep) {
    std::ostringstream os;
    os << "{\"t\":\"" << to_string(s.t) << "\",\"h\":\"" << to_string(s.h)
       << "\",\"x\":\"" << to_string(s.x) << "\",\"y\":\"" << to_string(s.y)
       << "\",\"z\":\"" << to_string(s.z) << "\",\"holds\":"
       << (rep.holds ? "true" : "false") << ",\"lhs_squared\":\""
       << to_string(rep.lhs_squared) << "\",\"rhs_g\":\""
       << to_string(rep.rhs_g) << "\"";
    if (rep.failure_reason)
        os << ",\"failure_reason\":\"" << to_string(*rep.failure_reason)
           << "\"";
    os << "}";
    return os.str();
}

std::string jsonl_record(const FoundSolution& hit) {
    std::string rec = jsonl_record(hit.tuple, hit.report);
    rec.pop_back();  // reopen the object to append the extension fields
    rec += ",\"provenance\":\"";
    rec += to_string(hit.provenance.kind);
    rec += "\"";
    if (hit.provenance.seed) {
        const SeedParams& seed = *hit.provenance.seed;
        rec += ",\"seed\":{\"m\":\"" + to_string(seed.m) + "\",\"t\":\"" +
               to_string(seed.t) + "\",\"h\":\"" + to_string(seed.h) +
               "\",\"z\":\"" + to_string(seed.z) + "\"}";
    }
    rec += "}";
    return rec;
}

}  // namespace twist
