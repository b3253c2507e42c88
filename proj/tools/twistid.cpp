// twistid: verify, construct, search, and render identities of the shape
//   sqrt(t(1/h^2-1/x^2)(1/h^2-1/y^2)(1/h^2-1/z^2))
//     = (1/h+1/x)(1/h+1/y)(1/h+1/z)
// over exact rationals. Records go to stdout, diagnostics to stderr.
// Exit codes: 0 success/holds, 1 clean negative (identity fails, seed
// rejected, row check failed), 2 malformed input or domain error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twist/construction.hpp"
#include "twist/families.hpp"
#include "twist/identity.hpp"
#include "twist/rational.hpp"
#include "twist/render.hpp"
#include "twist/search.hpp"

namespace {

twist::Rational parse_rational_arg(const std::string& text,
                                   const char* name) {
    const std::optional<twist::Rational> v = twist::parse_rational(text);
    if (!v)
        throw std::domain_error(std::string("argument ") + name +
                                ": not a rational: '" + text + "'");
    return *v;
}

// "a..b" or a bare "a" (meaning a..a), both ends int64.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text,
                                                  const char* name) {
    const auto bad = [&]() -> std::domain_error {
        return std::domain_error(std::string("argument ") + name +
                                 ": expected INT or INT..INT, got '" + text +
                                 "'");
    };
    const auto parse_int = [&](const std::string& part) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(part, &used);
            if (used != part.size()) throw bad();
            return static_cast<std::int64_t>(v);
        } catch (const std::domain_error&) {
            throw;
        } catch (const std::exception&) {
            throw bad();
        }
    };
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const std::int64_t v = parse_int(text);
        return {v, v};
    }
    return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

std::vector<twist::Rational> parse_rational_list(const std::string& text,
                                                 const char* name) {
    std::vector<twist::Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_rational_arg(text.substr(pos, comma - pos), name));
        pos = comma + 1;
    }
    return out;
}

twist::RenderStyle style_from(const std::string& name) {
    const std::optional<twist::RenderStyle> s = twist::parse_style(name);
    if (!s)
        throw std::domain_error("unknown style '" + name +
                                "' (expected plain, latex, or json)");
    return *s;
}

std::string seed_json(const twist::SeedParams& seed) {
    using twist::to_string;
    return "{\"m\":\"" + to_string(seed.m) + "\",\"t\":\"" +
           to_string(seed.t) + "\",\"h\":\"" + to_string(seed.h) +
           "\",\"z\":\"" + to_string(seed.z) + "\"}";
}

void print_tuple_plain(std::ostream& os, const twist::SolutionTuple& s) {
    using twist::to_string;
    os << "tuple: t=" << to_string(s.t) << " h=" << to_string(s.h)
       << " x=" << to_string(s.x) << " y=" << to_string(s.y)
       << " z=" << to_string(s.z) << "\n";
}

int cmd_verify(const std::vector<std::string>& args, const std::string& style,
               bool with_float, double tol) {
    static const char* names[] = {"t", "h", "x", "y", "z"};
    twist::Rational v[5];
    for (int i = 0; i < 5; ++i) v[i] = parse_rational_arg(args[i], names[i]);
    const twist::SolutionTuple s{v[0], v[1], v[2], v[3], v[4]};
    const twist::VerifyReport rep = twist::verify_exact(s);

    if (style_from(style) == twist::RenderStyle::Json) {
        std::cout << twist::jsonl_record(s, rep) << "\n";
    } else {
        print_tuple_plain(std::cout, s);
        std::cout << "nontrivial: " << (rep.nontrivial ? "true" : "false")
                  << "\n"
                  << "lhs_squared = " << twist::to_string(rep.lhs_squared)
                  << "\n"
                  << "rhs_g = " << twist::to_string(rep.rhs_g) << "\n"
                  << "holds: " << (rep.holds ? "true" : "false") << "\n";
        if (rep.failure_reason)
            std::cout << "reason: " << twist::to_string(*rep.failure_reason)
                      << "\n";
        if (with_float) {
            if (rep.nontrivial && rep.lhs_squared >= 0)
                std::cout << "float check (tol=" << tol << "): "
                          << (twist::verify_float(s, tol) ? "true" : "false")
                          << "\n";
            else
                std::cout << "float check (tol=" << tol
                          << "): skipped (undefined)\n";
        }
    }
    return rep.holds ? 0 : 1;
}

int cmd_construct(const std::vector<std::string>& args,
                  const std::string& style) {
    static const char* names[] = {"m", "t", "h", "z"};
    twist::Rational v[4];
    for (int i = 0; i < 4; ++i) v[i] = parse_rational_arg(args[i], names[i]);
    const twist::SeedParams seed(v[0], v[1], v[2], v[3]);  // may throw -> 2
    const twist::ConditionsReport cond = twist::conditions_hold(seed);
    const twist::ConstructionOutcome outcome = twist::construct(seed);

    const bool json = style_from(style) == twist::RenderStyle::Json;
    using twist::to_string;
    const std::string gamma = to_string(cond.gb.gamma);
    const std::string beta = to_string(cond.gb.beta);

    if (const auto* pair = std::get_if<twist::RationalPair>(&outcome)) {
        if (json) {
            std::cout << "{\"outcome\":\"rational-pair\",\"gamma\":\"" << gamma
                      << "\",\"beta\":\"" << beta << "\",\"discriminant\":\""
                      << to_string(cond.discriminant) << "\",\"x\":\""
                      << to_string(pair->x) << "\",\"y\":\""
                      << to_string(pair->y) << "\",\"record\":"
                      << twist::jsonl_record(pair->tuple,
                                             twist::verify_exact(pair->tuple))
                      << "}\n";
        } else {
            std::cout << "outcome: rational-pair\n"
                      << "gamma = " << gamma << "\n"
                      << "beta = " << beta << "\n"
                      << "discriminant = " << to_string(cond.discriminant)
                      << "\n"
                      << "x = " << to_string(pair->x) << "\n"
                      << "y = " << to_string(pair->y) << "\n";
            print_tuple_plain(std::cout, pair->tuple);
        }
        return 0;
    }

    std::string kind;
    std::string extra_name;
    std::string extra_value;
    if (const auto* rd = std::get_if<twist::RejectedDiscriminant>(&outcome)) {
        kind = "rejected-discriminant";
        extra_name = "discriminant";
        extra_value = to_string(rd->discriminant);
    } else if (const auto* rp =
                   std::get_if<twist::RejectedPositivity>(&outcome)) {
        kind = "rejected-positivity";
        extra_name = "positivity_value";
        extra_value = to_string(rp->positivity_value);
    } else {
        const auto& ri = std::get<twist::RealIrrational>(outcome);
        kind = "real-irrational";
        extra_name = "discriminant";
        extra_value = to_string(ri.discriminant);
    }
    if (json) {
        std::cout << "{\"outcome\":\"" << kind << "\",\"gamma\":\"" << gamma
                  << "\",\"beta\":\"" << beta << "\",\"" << extra_name
                  << "\":\"" << extra_value << "\"}\n";
    } else {
        std::cout << "outcome: " << kind << "\n"
                  << "gamma = " << gamma << "\n"
                  << "beta = " << beta << "\n"
                  << extra_name << " = " << extra_value << "\n";
    }
    return 1;
}

int cmd_family_list() {
    for (const twist::FamilyRow& row : twist::catalog())
        std::cout << row.name << ": t=" << row.t_fn.text()
                  << ", m=" << row.m_fn.text() << ", x=" << row.x_fn.text()
                  << ", y=" << row.y_fn.text() << ", z=" << row.z_fn.text()
                  << "\n";
    return 0;
}

int cmd_family_eval(const std::string& name, const std::string& h_text,
                    const std::string& style) {
    const twist::FamilyRow* row = twist::find_row(name);
    if (!row) throw std::domain_error("unknown family row '" + name + "'");
    const twist::Rational h = parse_rational_arg(h_text, "h");
    const auto [seed, tuple] = twist::eval_at(*row, h);  // may throw -> 2
    const twist::VerifyReport rep = twist::verify_exact(tuple);

    if (style_from(style) == twist::RenderStyle::Json) {
        std::cout << "{\"row\":\"" << row->name
                  << "\",\"seed\":" << seed_json(seed)
                  << ",\"record\":" << twist::jsonl_record(tuple, rep)
                  << "}\n";
    } else {
        using twist::to_string;
        std::cout << "row: " << row->name << "\n"
                  << "seed: m=" << to_string(seed.m)
                  << " t=" << to_string(seed.t) << " h=" << to_string(seed.h)
                  << " z=" << to_string(seed.z) << "\n";
        print_tuple_plain(std::cout, tuple);
        std::cout << "holds: " << (rep.holds ? "true" : "false") << "\n";
    }
    return rep.holds ? 0 : 1;
}

int cmd_family_check(const std::string& name, long h_max) {
    std::vector<const twist::FamilyRow*> rows;
    if (name == "all") {
        for (const twist::FamilyRow& row : twist::catalog())
            rows.push_back(&row);
    } else {
        const twist::FamilyRow* row = twist::find_row(name);
        if (!row) throw std::domain_error("unknown family row '" + name + "'");
        rows.push_back(row);
    }
    bool all_ok = true;
    for (const twist::FamilyRow* row : rows) {
        const twist::RowValidation rep = twist::validate_row(*row, 1, h_max);
        std::cout << row->name << ": ";
        if (rep.ok()) {
            std::cout << "ok (" << rep.checked << " h values";
            if (rep.skipped) std::cout << ", " << rep.skipped << " skipped";
            std::cout << ")\n";
        } else {
            all_ok = false;
            std::cout << "FAILED at h =";
            for (long h : rep.failed_h) std::cout << " " << h;
            std::cout << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

int emit_search_result(const twist::SearchResult& result,
                       const std::string& out_path, const char* kind) {
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file)
            throw std::domain_error("cannot open output file '" + out_path +
                                    "'");
    }
    std::ostream& os = out_path.empty() ? std::cout : file;
    for (const twist::FoundSolution& hit : result.solutions)
        os << twist::jsonl_record(hit) << "\n";
    std::cerr << "search " << kind << ": " << result.counters.summary()
              << " unique=" << result.solutions.size() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact toolkit for radical product identities "
        "sqrt(t(1/h^2-1/x^2)(1/h^2-1/y^2)(1/h^2-1/z^2)) = "
        "(1/h+1/x)(1/h+1/y)(1/h+1/z)"};
    // h is a tuple slot everywhere in this tool; keep it out of flag space.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    std::vector<std::string> tuple_args;
    std::string style = "plain";
    bool with_float = false;
    double tol = 1e-9;
    CLI::App* verify =
        app.add_subcommand("verify", "Check a tuple t h x y z exactly");
    verify->add_option("values", tuple_args, "t h x y z as rationals")
        ->expected(5)
        ->required();
    verify->add_option("--style", style, "plain or json");
    verify->add_flag("--float", with_float, "also run the binary64 check");
    verify->add_option("--tol", tol, "tolerance for --float");

    std::vector<std::string> seed_args;
    std::string construct_style = "plain";
    CLI::App* construct = app.add_subcommand(
        "construct", "Build x,y from a seed m t h z via the quadratic");
    construct->add_option("values", seed_args, "m t h z as rationals")
        ->expected(4)
        ->required();
    construct->add_option("--style", construct_style, "plain or json");

    CLI::App* family =
        app.add_subcommand("family", "Work with the parametric family rows");
    family->require_subcommand(1);
    CLI::App* family_list =
        family->add_subcommand("list", "Print the catalog");
    std::string family_name, family_h;
    std::string family_style = "plain";
    CLI::App* family_eval =
        family->add_subcommand("eval", "Instantiate a row at h");
    family_eval->add_option("name", family_name, "row1..row8, u1, u2")
        ->required();
    family_eval->add_option("h", family_h, "rational h")->required();
    family_eval->add_option("--style", family_style, "plain or json");
    std::string check_name;
    long check_h_max = 50;
    CLI::App* family_check = family->add_subcommand(
        "check", "Validate rows against construction over h = 1..N");
    family_check->add_option("name", check_name, "row name or 'all'")
        ->required();
    family_check->add_option("--h-max", check_h_max, "top of the h range");

    CLI::App* search =
        app.add_subcommand("search", "Hunt for solutions, JSONL to stdout");
    search->require_subcommand(1);
    std::int64_t t_min = 0, t_max = 0, h_max = 0, v_max = 0;
    bool naive = false, with_signed = false;
    std::string out_path;
    int workers = 1;
    CLI::App* integral = search->add_subcommand(
        "integral", "Exhaust integer tuples inside bounds");
    integral->add_option("--t-min", t_min, "smallest t")->required();
    integral->add_option("--t-max", t_max, "largest t")->required();
    integral->add_option("--h-max", h_max, "h runs over 1..h-max")
        ->required();
    integral->add_option("--v-max", v_max, "cap on |x|,|y|,|z|")->required();
    integral->add_flag("--naive", naive, "use the exhaustive oracle");
    integral->add_flag("--signed", with_signed, "admit negative x,y,z");
    integral->add_option("--out", out_path, "write records to a file");
    integral->add_option("--workers", workers, "worker threads");

    std::string grid_h, grid_t = "1..1", grid_z_offset = "1..1";
    std::int64_t m_num_max = 1, m_den_max = 1;
    std::string p_out_path;
    int p_workers = 1;
    CLI::App* parametric = search->add_subcommand(
        "parametric", "Run construction over a seed grid");
    parametric
        ->add_option("--h", grid_h, "comma-separated rational h values")
        ->required();
    parametric->add_option("--t", grid_t, "t range, INT or INT..INT");
    parametric->add_option("--z-offset", grid_z_offset,
                           "z = h + offset, INT or INT..INT");
    parametric->add_option("--m-num-max", m_num_max,
                           "m = p/q with p up to this");
    parametric->add_option("--m-den-max", m_den_max,
                           "m = p/q with q up to this");
    parametric->add_option("--out", p_out_path, "write records to a file");
    parametric->add_option("--workers", p_workers, "worker threads");

    std::vector<std::string> render_args;
    std::string render_style = "plain";
    CLI::App* render = app.add_subcommand(
        "render", "Print a verified tuple as a display identity");
    render->add_option("values", render_args, "t h x y z as rationals")
        ->expected(5)
        ->required();
    render->add_option("--style", render_style, "plain, latex, or json");

    try {
        app.parse(argc, argv);

        if (app.got_subcommand(verify))
            return cmd_verify(tuple_args, style, with_float, tol);
        if (app.got_subcommand(construct))
            return cmd_construct(seed_args, construct_style);
        if (app.got_subcommand(family)) {
            if (family->got_subcommand(family_list)) return cmd_family_list();
            if (family->got_subcommand(family_eval))
                return cmd_family_eval(family_name, family_h, family_style);
            if (family->got_subcommand(family_check))
                return cmd_family_check(check_name, check_h_max);
        }
        if (app.got_subcommand(search)) {
            if (search->got_subcommand(integral)) {
                twist::IntegralBounds bounds;
                bounds.t_min = t_min;
                bounds.t_max = t_max;
                bounds.h_max = h_max;
                bounds.v_max = v_max;
                bounds.positive_only = !with_signed;
                bounds.validate();  // may throw -> 2
                const twist::SearchResult result =
                    naive ? twist::search_integral_naive(bounds, workers)
                          : twist::search_integral_fast(bounds, workers);
                return emit_search_result(result, out_path,
                                          naive ? "integral-naive"
                                                : "integral-fast");
            }
            twist::SeedGrid grid;
            grid.h_values = parse_rational_list(grid_h, "--h");
            std::tie(grid.t_min, grid.t_max) = parse_range(grid_t, "--t");
            std::tie(grid.z_offset_min, grid.z_offset_max) =
                parse_range(grid_z_offset, "--z-offset");
            grid.m_numerator_max = m_num_max;
            grid.m_denominator_max = m_den_max;
            grid.validate();  // may throw -> 2
            return emit_search_result(twist::search_parametric(grid, p_workers),
                                      p_out_path, "parametric");
        }
        if (app.got_subcommand(render)) {
            static const char* names[] = {"t", "h", "x", "y", "z"};
            twist::Rational v[5];
            for (int i = 0; i < 5; ++i)
                v[i] = parse_rational_arg(render_args[i], names[i]);
            std::cout << twist::render_identity(
                             twist::SolutionTuple{v[0], v[1], v[2], v[3],
                                                  v[4]},
                             style_from(render_style))
                      << "\n";
            return 0;
        }
        return 2;  // unreachable with require_subcommand(1)
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
