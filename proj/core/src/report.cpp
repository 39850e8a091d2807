#include "report.hpp"

#include "dring/errors.hpp"
#include "dring/expr_parser.hpp"
#include "dring/problem.hpp"

namespace dring::report {

json poly_list(const std::vector<Poly>& polys) {
    json out = json::array();
    for (const auto& p : polys) out.push_back(p.str());
    return out;
}

json series(const Series& s) {
    json out = json::array();
    for (const auto& c : s.coeffs()) out.push_back(c.str());
    return out;
}

json solution(const Solution& s) {
    json coords = json::object();
    for (std::size_t i = 0; i < s.coords.size(); ++i) coords[s.ring->names[i]] = series(s.coords[i]);
    return json{{"coords", coords},
                {"method", to_string(s.method)},
                {"order", s.order},
                {"prime", s.prime.str(*s.ring)}};
}

json kernel(const KernelApprox& k) {
    return json{{"basis", poly_list(k.basis)},
                {"centered_basis", poly_list(k.centered_basis)},
                {"degree", k.degree},
                {"dimension", k.dimension()},
                {"order", k.order}};
}

json verdict(const SimplicityVerdict& v) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NotSimple>) {
                return json{{"kind", "not_simple"},
                            {"witness", poly_list(x.witness.basis().elements)},
                            {"checks", {{"d_stable", x.d_stable}, {"inside_prime", x.inside_prime}, {"nonzero", x.nonzero}}}};
            } else if constexpr (std::is_same_v<T, NoObstructionUpTo>) {
                return json{{"kind", "no_obstruction_up_to"},
                            {"degree", x.degree},
                            {"order", x.order},
                            {"simplicity_asserted", false}};
            } else if constexpr (std::is_same_v<T, TrivialSolution>) {
                return json{{"kind", "trivial_solution"}};
            } else {
                return json{{"kind", "quotient_diagnostic"},
                            {"annihilator_escapes_prime", x.annihilator_escapes_prime},
                            {"transporter", poly_list(x.transporter.basis().elements)}};
            }
        },
        v);
}

json simplicity(const SimplicityReport& r) {
    json dims{{"codimension", r.codimension}, {"prime", r.prime_dimension}, {"ring", r.ring_dimension}};
    if (r.witness_dimension) dims["witness"] = *r.witness_dimension;
    if (r.trdeg_upper_bound) dims["trdeg_upper_bound"] = *r.trdeg_upper_bound;
    json out{{"dimensions", dims}, {"verdict", verdict(r.verdict)}};
    out["kernel"] = r.kernel ? kernel(*r.kernel) : json(nullptr);
    return out;
}

json ell(const EllReport& r) {
    return json{{"generator_ell", r.generator_ell ? json(*r.generator_ell) : json(nullptr)},
                {"probe_violations", poly_list(r.probe_violations)}};
}

namespace {

SolveMethod method_from(const std::string& s) {
    if (s == "exponential") return SolveMethod::exponential;
    if (s == "ode") return SolveMethod::ode;
    return SolveMethod::manual;
}

}  // namespace

Solution parse_solution(const json& j, const RingPtr& ring) {
    if (j.contains("result") && j["result"].contains("solution")) return parse_solution(j["result"]["solution"], ring);
    try {
        Solution s;
        s.ring = ring;
        s.prime = parse_prime(j.at("prime").get<std::string>(), ring);
        s.order = j.at("order").get<std::size_t>();
        s.method = method_from(j.value("method", "manual"));
        const auto& coords = j.at("coords");
        for (const auto& name : ring->names) {
            if (!coords.contains(name)) throw InputError("solution file has no series for '" + name + "'");
            std::vector<FieldElement> c;
            for (const auto& entry : coords.at(name)) {
                c.emplace_back(parse_expression(entry.get<std::string>(), ring));
            }
            if (c.size() != s.order + 1) {
                throw InputError("series for '" + name + "' needs " + std::to_string(s.order + 1) + " coefficients");
            }
            s.coords.emplace_back(std::move(c));
        }
        return s;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed solution file: ") + e.what());
    }
}

}  // namespace dring::report
