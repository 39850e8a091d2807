#include "dring/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"

namespace dring {

using report::json;

namespace {

constexpr const char* kLnNote =
    "heuristic: the locally-nilpotent criterion is evaluated on generators and probes only and is never "
    "promoted to a simplicity verdict; a nonzero D-stable ideal inside the prime may still exist";

json flags_echo(const CommandOptions& o) {
    json f{{"bound", o.bound}, {"cap", o.cap},       {"deg", o.degree},
           {"ln", o.ln},       {"method", o.method}, {"order", o.order},
           {"probe_degree", o.probe_degree}};
    if (o.elem) f["elem"] = *o.elem;
    return f;
}

json cmd_solve(const CommandOptions& o, const ProblemFile& pf, std::vector<std::string>& warnings) {
    Derivation d = pf.make_derivation();
    const PrimeSpec& p = pf.require_prime();
    if (o.method != "exp" && o.method != "ode" && o.method != "both") {
        throw InputError("--method must be exp, ode or both");
    }
    std::optional<Solution> exp_sol;
    std::optional<Solution> ode_sol;
    if (o.method == "exp" || o.method == "both") exp_sol = solve_exponential(d, p, o.order);
    if (o.method == "ode" || (o.method == "both" && p.is_point())) ode_sol = solve_ode(d, p, o.order);
    if (o.method == "both" && !p.is_point()) {
        warnings.emplace_back("ODE recursion skipped: it is only defined at rational points");
    }
    json agreement = nullptr;
    if (exp_sol && ode_sol) {
        for (std::size_t i = 0; i < exp_sol->coords.size(); ++i) {
            if (!(exp_sol->coords[i] == ode_sol->coords[i])) {
                throw InconsistencyError("exponential and ODE solutions disagree for variable '" +
                                         d.ring()->names[i] + "'");
            }
        }
        agreement = true;
    }
    const Solution& s = exp_sol ? *exp_sol : *ode_sol;
    json out{{"agreement", agreement}, {"solution", report::solution(s)}, {"trivial", is_trivial(d, p)}};
    out["verified"] = s.order >= 1 ? json(verify_solution(s, d, s.order - 1)) : json(nullptr);
    return out;
}

json cmd_simplicity(const CommandOptions& o, const ProblemFile& pf, std::vector<std::string>& warnings) {
    Derivation d = pf.make_derivation();
    const PrimeSpec& p = pf.require_prime();
    SimplicityReport rep = simplicity_report(d, p, o.degree, o.order, o.cap);
    warnings.insert(warnings.end(), rep.warnings.begin(), rep.warnings.end());
    json out = report::simplicity(rep);
    out["trivial"] = std::holds_alternative<TrivialSolution>(rep.verdict);
    if (o.ln) {
        Ideal m = p.ideal(d.ring());
        NilpotencyResult nil = is_locally_nilpotent_up_to(d, o.bound);
        EllReport ell = ell_search(d, m, o.bound, o.probe_degree);
        json ln = report::ell(ell);
        ln["locally_nilpotent_confirmed"] = nil.nilpotent;
        ln["criterion_holds"] = ell.generator_ell ? json(ln_simplicity_criterion(d, m, *ell.generator_ell)) : json(nullptr);
        ln["heuristic"] = true;
        ln["certificate"] = false;
        ln["note"] = kLnNote;
        out["locally_nilpotent"] = ln;
        warnings.emplace_back(kLnNote);
    }
    if (d.quotient_ideal() && p.is_point()) {
        json q;
        std::vector<Poly> cand = rep.kernel ? rep.kernel->basis : std::vector<Poly>{};
        Ideal candidate = d.quotient_ideal()->plus(cand);
        if (candidate.is_unit()) {
            q["annihilator"] = nullptr;
            warnings.emplace_back("kernel candidate is the unit ideal; annihilator diagnostic skipped");
        } else {
            q["annihilator"] = report::verdict(annihilator_check(d, p, candidate));
        }
        LiftReport lift = quotient_lift_check(d.lift(), *d.quotient_ideal(), p, o.degree, o.order);
        q["lift"] = json{{"ideal_in_kernel_span", lift.ideal_in_kernel_span},
                         {"kernel_in_ideal", lift.kernel_in_ideal},
                         {"passes", lift.passes()},
                         {"stable", lift.stable}};
        out["quotient"] = q;
    }
    return out;
}

json cmd_stable(const ProblemFile& pf) {
    Derivation d = pf.make_derivation(false);
    json out;
    auto quot = pf.quotient();
    out["ideal_stable"] = quot ? stabilizes(d, *quot) : true;
    if (pf.prime) {
        Ideal prime = pf.prime->ideal(d.ring());
        if (quot) prime = prime.plus(*quot);
        out["prime"] = pf.prime->str(*d.ring());
        out["prime_stable"] = stabilizes(d, prime);
        out["trivial"] = is_trivial(d, *pf.prime);
    } else {
        out["prime_stable"] = nullptr;
    }
    return out;
}

json cmd_nilpotent(const CommandOptions& o, const ProblemFile& pf) {
    Derivation d = pf.make_derivation();
    NilpotencyResult r = is_locally_nilpotent_up_to(d, o.bound);
    json index = json::object();
    for (std::size_t i = 0; i < r.index.size(); ++i) {
        index[d.ring()->names[i]] = r.index[i] ? json(*r.index[i]) : json(nullptr);
    }
    return json{{"bound", o.bound},
                {"index", index},
                {"nilpotent", r.nilpotent},
                {"status", r.nilpotent ? "nilpotent" : "not_confirmed_at_bound"}};
}

json cmd_exp(const CommandOptions& o, const ProblemFile& pf) {
    if (!o.elem) throw InputError("exp needs --elem <polynomial>");
    Derivation d = pf.make_derivation();
    Poly f = parse_polynomial(*o.elem, d.ring());
    return json{{"coefficients", report::poly_list(exp_map(d, f, o.order))}, {"element", f.str()}, {"order", o.order}};
}

json cmd_verify(const CommandOptions& o, const ProblemFile& pf) {
    if (!o.solution_text) throw InputError("verify needs --solution <file>");
    json j;
    try {
        j = json::parse(*o.solution_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("solution file is not valid JSON: ") + e.what());
    }
    Derivation d = pf.make_derivation();
    Solution s = report::parse_solution(j, d.ring());
    if (pf.prime && !(*pf.prime == s.prime)) {
        throw InputError("solution prime " + s.prime.str(*d.ring()) + " differs from the problem prime");
    }
    if (s.order == 0) throw InputError("a solution of order 0 cannot be verified");
    return json{{"order", s.order - 1}, {"prime", s.prime.str(*d.ring())}, {"verified", verify_solution(s, d, s.order - 1)}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string error_line(const char* kind, int code, const std::string& message) {
    json e{{"error", {{"exit_code", code}, {"kind", kind}, {"message", message}}}};
    return e.dump() + "\n";
}

}  // namespace

std::string input_digest(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

std::string run_command(const CommandOptions& opts, const ProblemFile& problem, std::string_view input_text) {
    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> warnings;
    json result;
    const std::string& c = opts.command;
    if (c == "solve") {
        result = cmd_solve(opts, problem, warnings);
    } else if (c == "kernel") {
        Derivation d = problem.make_derivation();
        result = report::kernel(kernel_approx(d, problem.require_prime(), opts.degree, opts.order));
        result["prime"] = problem.require_prime().str(*d.ring());
    } else if (c == "simplicity") {
        result = cmd_simplicity(opts, problem, warnings);
    } else if (c == "stable") {
        result = cmd_stable(problem);
    } else if (c == "nilpotent") {
        result = cmd_nilpotent(opts, problem);
    } else if (c == "exp") {
        result = cmd_exp(opts, problem);
    } else if (c == "verify") {
        result = cmd_verify(opts, problem);
    } else {
        throw InputError("unknown command '" + c + "'");
    }
    json rep{{"command", c},
             {"derivation", problem.make_derivation(false).str()},
             {"flags", flags_echo(opts)},
             {"input_digest", input_digest(input_text)},
             {"result", result},
             {"warnings", warnings}};
    if (opts.timing) {
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        rep["timing_ms"] = static_cast<double>(us.count()) / 1000.0;
    }
    return rep.dump(2) + "\n";
}

CliOutcome run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Truncated power-series solutions of polynomial derivations and simplicity diagnostics", "dring"};
    CommandOptions opts;
    std::string input_path;
    std::optional<std::string> solution_path;
    app.add_option("command", opts.command, "solve | kernel | simplicity | stable | nilpotent | exp | verify")
        ->required()
        ->check(CLI::IsMember({"solve", "kernel", "simplicity", "stable", "nilpotent", "exp", "verify"}));
    app.add_option("--input", input_path, "problem file")->required();
    app.add_option("--order", opts.order, "truncation order r");
    app.add_option("--deg", opts.degree, "degree bound for kernel searches");
    app.add_option("--method", opts.method, "exp | ode | both")->check(CLI::IsMember({"exp", "ode", "both"}));
    app.add_flag("--ln", opts.ln, "add locally-nilpotent diagnostics to simplicity");
    app.add_option("--bound", opts.bound, "iteration bound for nilpotency and ell searches");
    app.add_option("--probe-degree", opts.probe_degree, "max product length for ell probes");
    app.add_option("--cap", opts.cap, "saturation round cap");
    app.add_option("--elem", opts.elem, "ring element for exp");
    app.add_option("--solution", solution_path, "solution JSON for verify");
    app.add_flag("--json", "JSON output (the only mode)");
    app.add_flag("--timing", opts.timing, "include wall-clock timing in the report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {kExitOk, app.help()};
    } catch (const CLI::ParseError& e) {
        return {kExitInputError, error_line("input_error", kExitInputError, e.what())};
    }

    try {
        std::string text = read_file(input_path);
        if (solution_path) opts.solution_text = read_file(*solution_path);
        ProblemFile pf = parse_problem(text);
        return {kExitOk, run_command(opts, pf, text)};
    } catch (const InputError& e) {
        return {kExitInputError, error_line("input_error", kExitInputError, e.what())};
    } catch (const ResourceError& e) {
        return {kExitResourceError, error_line("resource_cap_exceeded", kExitResourceError, e.what())};
    } catch (const InconsistencyError& e) {
        return {kExitInconsistent, error_line("internal_inconsistency", kExitInconsistent, e.what())};
    }
}

}  // namespace dring
