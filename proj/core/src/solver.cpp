#include "dring/solver.hpp"

#include <algorithm>

#include "dring/errors.hpp"
#include "dring/matrix.hpp"

namespace dring {

PrimeSpec PrimeSpec::point(std::vector<Rational> coords) {
    PrimeSpec p;
    for (auto& c : coords) p.values_.emplace_back(std::move(c));
    p.as_point_ = true;
    return p;
}

PrimeSpec PrimeSpec::coordinate(std::vector<std::optional<Rational>> values) {
    PrimeSpec p;
    p.values_ = std::move(values);
    p.as_point_ = false;
    return p;
}

bool PrimeSpec::is_point() const {
    return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
}

std::vector<Rational> PrimeSpec::center() const {
    std::vector<Rational> c;
    c.reserve(values_.size());
    for (const auto& v : values_) c.push_back(v.value_or(Rational(0)));
    return c;
}

std::vector<Poly> PrimeSpec::generators(const RingPtr& ring) const {
    if (ring->size() != values_.size()) throw InputError("prime arity does not match ring");
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i]) gens.push_back(Poly::variable(ring, i) - Poly::constant(ring, *values_[i]));
    }
    return gens;
}

Ideal PrimeSpec::ideal(const RingPtr& ring) const { return Ideal(ring, generators(ring)); }

std::string PrimeSpec::str(const Ring& ring) const {
    std::string out = as_point_ ? "point(" : "coord(";
    bool first = true;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!values_[i]) continue;
        if (!first) out += ", ";
        first = false;
        if (!as_point_) out += ring.names[i] + "=";
        out += values_[i]->str();
    }
    return out + ")";
}

FieldElement residue_eval(const PrimeSpec& p, const Poly& f) {
    const RingPtr& ring = f.ring();
    if (p.size() != ring->size()) throw InputError("prime arity does not match ring");
    if (p.is_point()) return FieldElement(f.evaluate(p.center()));
    std::vector<Poly> images;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        const auto& v = p.values()[i];
        images.push_back(v ? Poly::constant(ring, *v) : Poly::variable(ring, i));
    }
    return FieldElement(RationalFunction(f.substitute(images, ring)));
}

std::string to_string(SolveMethod m) {
    switch (m) {
    case SolveMethod::exponential: return "exponential";
    case SolveMethod::ode: return "ode";
    case SolveMethod::manual: return "manual";
    }
    return "?";
}

namespace {

void require_on_quotient_variety(const Derivation& d, const PrimeSpec& p) {
    if (p.size() != d.ring()->size()) throw InputError("prime arity does not match ring");
    if (!d.quotient_ideal()) return;
    for (const auto& g : d.quotient_ideal()->generators()) {
        if (!residue_eval(p, g).is_zero()) {
            throw InputError("prime " + p.str(*d.ring()) + " does not contain the quotient generator " + g.str());
        }
    }
}

std::vector<bool> residue_mask(const PrimeSpec& p) {
    std::vector<bool> mask;
    for (const auto& v : p.values()) mask.push_back(!v.has_value());
    return mask;
}

bool lives_in_residue_field(const FieldElement& e, const std::vector<bool>& mask) {
    if (e.is_rational()) return true;
    return e.function().numerator().supported_in(mask) && e.function().denominator().supported_in(mask);
}

// Jacobian criterion: the residue-variable constant terms are algebraically
// independent over Q iff their Jacobian has full rank (characteristic 0).
bool residue_images_independent(const Solution& s) {
    std::vector<std::size_t> residue_vars;
    for (std::size_t i = 0; i < s.prime.size(); ++i) {
        if (!s.prime.values()[i]) residue_vars.push_back(i);
    }
    if (residue_vars.empty()) return true;
    Matrix<FieldElement> jac(residue_vars.size(), residue_vars.size());
    for (std::size_t a = 0; a < residue_vars.size(); ++a) {
        const FieldElement& c = s.coords[residue_vars[a]][0];
        if (c.is_rational()) return false;
        for (std::size_t b = 0; b < residue_vars.size(); ++b) {
            jac(a, b) = FieldElement(c.function().partial(residue_vars[b]));
        }
    }
    return rref(std::move(jac)).rank == residue_vars.size();
}

// Monomials of total degree <= d, descending in the ring order.
std::vector<Monomial> monomials_up_to(const RingPtr& ring, std::size_t d) {
    std::vector<Monomial> out;
    const std::size_t n = ring->size();
    std::vector<unsigned> e(n, 0);
    auto rec = [&](auto&& self, std::size_t var, std::size_t budget) -> void {
        if (var == n) {
            out.emplace_back(e);
            return;
        }
        for (std::size_t k = 0; k <= budget; ++k) {
            e[var] = static_cast<unsigned>(k);
            self(self, var + 1, budget - k);
        }
        e[var] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring->order.compare(a, b) > 0; });
    return out;
}

// Splits a row of residue-field entries into Q-linear constraints: bring the
// row to a common denominator and read off numerator coefficients.
std::vector<std::vector<Rational>> expand_row(const std::vector<FieldElement>& row) {
    const bool all_rational = std::all_of(row.begin(), row.end(), [](const FieldElement& e) { return e.is_rational(); });
    if (all_rational) {
        std::vector<Rational> r;
        r.reserve(row.size());
        for (const auto& e : row) r.push_back(e.rational());
        return {r};
    }
    RingPtr ring;
    for (const auto& e : row) {
        if (!e.is_rational()) {
            ring = e.function().ring();
            break;
        }
    }
    std::vector<Poly> dens;
    std::vector<std::size_t> den_index(row.size(), 0);
    std::vector<RationalFunction> funcs;
    for (std::size_t j = 0; j < row.size(); ++j) {
        RationalFunction f = row[j].is_rational() ? RationalFunction(Poly::constant(ring, row[j].rational()))
                                                  : row[j].function();
        auto it = std::find(dens.begin(), dens.end(), f.denominator());
        if (it == dens.end()) {
            dens.push_back(f.denominator());
            it = dens.end() - 1;
        }
        den_index[j] = static_cast<std::size_t>(it - dens.begin());
        funcs.push_back(std::move(f));
    }
    std::vector<Poly> cofactor(dens.size(), Poly::constant(ring, Rational(1)));
    for (std::size_t a = 0; a < dens.size(); ++a) {
        for (std::size_t b = 0; b < dens.size(); ++b) {
            if (a != b) cofactor[a] *= dens[b];
        }
    }
    std::vector<Poly> nums;
    std::vector<Monomial> support;
    for (std::size_t j = 0; j < row.size(); ++j) {
        nums.push_back(funcs[j].numerator() * cofactor[den_index[j]]);
        for (const auto& t : nums.back().terms()) {
            if (std::find(support.begin(), support.end(), t.monomial) == support.end()) support.push_back(t.monomial);
        }
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& m : support) {
        std::vector<Rational> r;
        r.reserve(row.size());
        for (const auto& num : nums) r.push_back(num.coeff(m));
        rows.push_back(std::move(r));
    }
    return rows;
}

Poly vector_to_poly(const RingPtr& ring, const std::vector<Monomial>& cols, const std::vector<Rational>& v) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!v[j].is_zero()) terms.push_back({cols[j], v[j]});
    }
    return Poly(ring, std::move(terms));
}

std::vector<Rational> poly_to_vector(const Poly& f, const std::vector<Monomial>& cols, bool& fits) {
    std::vector<Rational> v(cols.size());
    fits = true;
    for (const auto& t : f.terms()) {
        auto it = std::find(cols.begin(), cols.end(), t.monomial);
        if (it == cols.end()) {
            fits = false;
            continue;
        }
        v[static_cast<std::size_t>(it - cols.begin())] = t.coeff;
    }
    return v;
}

std::vector<Rational> negated(std::vector<Rational> v) {
    for (auto& x : v) x = -x;
    return v;
}

}  // namespace

Solution solve_exponential(const Derivation& d, const PrimeSpec& p, std::size_t order) {
    require_on_quotient_variety(d, p);
    Solution s{d.ring(), p, order, {}, SolveMethod::exponential};
    for (std::size_t i = 0; i < d.ring()->size(); ++i) {
        auto coeffs = exp_map(d, Poly::variable(d.ring(), i), order);
        std::vector<FieldElement> c;
        c.reserve(coeffs.size());
        for (const auto& poly : coeffs) c.push_back(residue_eval(p, poly));
        s.coords.emplace_back(std::move(c));
    }
    return s;
}

Solution solve_ode(const Derivation& d, const PrimeSpec& p, std::size_t order) {
    if (!p.is_point()) throw InputError("the ODE recursion is only available at rational points");
    require_on_quotient_variety(d, p);
    const std::size_t n = d.ring()->size();
    Solution s{d.ring(), p, order, {}, SolveMethod::ode};
    for (std::size_t i = 0; i < n; ++i) s.coords.push_back(Series::constant(FieldElement(*p.values()[i]), order));
    for (std::size_t k = 0; k < order; ++k) {
        std::vector<Series> partial;
        partial.reserve(n);
        for (const auto& c : s.coords) partial.push_back(truncate(c, k));
        std::vector<FieldElement> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            Series fi = poly_eval_series<FieldElement>(d.coeff(i), partial, k);
            next[i] = fi[k] / FieldElement(Rational(static_cast<long>(k + 1)));
        }
        for (std::size_t i = 0; i < n; ++i) s.coords[i][k + 1] = next[i];
    }
    return s;
}

bool verify_solution(const Solution& s, const Derivation& d, std::size_t order) {
    if (s.order == 0 || order > s.order - 1) {
        throw InputError("verification order must be at most the solution order minus one");
    }
    if (!same_ring(s.ring, d.ring()) || s.coords.size() != d.ring()->size() || s.prime.size() != d.ring()->size()) {
        throw InputError("solution and derivation do not share a ring");
    }
    const auto mask = residue_mask(s.prime);
    for (const auto& c : s.coords) {
        if (c.order() < s.order) return false;
        for (const auto& e : c.coeffs()) {
            if (!lives_in_residue_field(e, mask)) return false;
        }
    }
    for (std::size_t i = 0; i < s.coords.size(); ++i) {
        Series lhs = poly_eval_series<FieldElement>(d.coeff(i), s.coords, order);
        Series rhs = truncate(series_derive(s.coords[i]), order);
        if (!(lhs == rhs)) return false;
    }
    for (std::size_t i = 0; i < s.prime.size(); ++i) {
        const auto& v = s.prime.values()[i];
        if (v && !(s.coords[i][0] == FieldElement(*v))) return false;
    }
    if (d.quotient_ideal()) {
        for (const auto& g : d.quotient_ideal()->generators()) {
            if (!push(s, g, order).is_zero()) return false;
        }
    }
    return residue_images_independent(s);
}

bool is_trivial(const Derivation& d, const PrimeSpec& p) {
    return std::all_of(d.coeffs().begin(), d.coeffs().end(), [&](const Poly& f) { return residue_eval(p, f).is_zero(); });
}

Series push(const Solution& s, const Poly& g, std::size_t order) {
    if (order > s.order) throw InputError("push order exceeds the solution order");
    return poly_eval_series<FieldElement>(g, s.coords, order);
}

KernelApprox kernel_from_solution(const Solution& s, std::size_t degree, std::size_t order) {
    if (order > s.order) throw InputError("kernel order exceeds the solution order");
    const RingPtr& ring = s.ring;
    const auto center = s.prime.center();
    std::vector<Series> centered;
    for (std::size_t i = 0; i < s.coords.size(); ++i) {
        Series c = truncate(s.coords[i], order);
        c[0] = c[0] - FieldElement(center[i]);
        centered.push_back(std::move(c));
    }
    const auto cols = monomials_up_to(ring, degree);
    std::vector<Series> pushed;
    pushed.reserve(cols.size());
    for (const auto& m : cols) pushed.push_back(poly_eval_series<FieldElement>(Poly::monomial(ring, m), centered, order));

    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 0; k <= order; ++k) {
        std::vector<FieldElement> row;
        row.reserve(cols.size());
        for (const auto& p : pushed) row.push_back(p[k]);
        for (auto& r : expand_row(row)) rows.push_back(std::move(r));
    }
    KernelApprox out{degree, order, s.prime, {}, {}};
    std::vector<std::vector<Rational>> kernel;
    if (rows.empty()) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::vector<Rational> v(cols.size());
            v[j] = Rational(1);
            kernel.push_back(std::move(v));
        }
    } else {
        kernel = rref(Matrix<Rational>(rows)).kernel;
    }
    if (kernel.empty()) return out;
    auto echelon = rref(Matrix<Rational>(kernel));
    const auto back = negated(center);
    for (std::size_t i = 0; i < echelon.rank; ++i) {
        Poly c = vector_to_poly(ring, cols, echelon.reduced.row(i));
        out.basis.push_back(c.shift(back));
        out.centered_basis.push_back(std::move(c));
    }
    return out;
}

KernelApprox kernel_approx(const Derivation& d, const PrimeSpec& p, std::size_t degree, std::size_t order) {
    return kernel_from_solution(solve_exponential(d, p, order), degree, order);
}

bool kernel_span_contains(const KernelApprox& k, const Poly& f) {
    Poly centered = f.shift(k.prime.center());
    if (centered.is_zero()) return true;
    if (k.centered_basis.empty()) return false;
    const RingPtr& ring = f.ring();
    const auto cols = monomials_up_to(ring, k.degree);
    bool fits = true;
    auto target = poly_to_vector(centered, cols, fits);
    if (!fits) return false;
    std::vector<std::vector<Rational>> rows;
    for (const auto& b : k.centered_basis) {
        bool ok = true;
        rows.push_back(poly_to_vector(b.in_ring(ring), cols, ok));
    }
    std::size_t before = rref(Matrix<Rational>(rows)).rank;
    rows.push_back(std::move(target));
    return rref(Matrix<Rational>(rows)).rank == before;
}

bool topologically_equal(const Derivation& d, const Solution& a, const Solution& b, std::size_t degree,
                         std::size_t order) {
    if (!(a.prime == b.prime)) throw InputError("solutions pass through different primes");
    for (const Solution* s : {&a, &b}) {
        if (s->order == 0 || !verify_solution(*s, d, s->order - 1)) {
            throw InputError("topological comparison needs two verified solutions");
        }
    }
    return kernel_from_solution(a, degree, order).centered_basis == kernel_from_solution(b, degree, order).centered_basis;
}

std::size_t default_kernel_order(const Derivation& d, std::size_t degree) {
    return 2 * (degree * static_cast<std::size_t>(std::max(d.max_coeff_degree(), 0)) + 1);
}

SimplicityReport simplicity_report(const Derivation& d, const PrimeSpec& p, std::size_t degree, std::size_t order,
                                   std::size_t saturation_cap) {
    require_on_quotient_variety(d, p);
    const RingPtr& ring = d.ring();
    const Ideal base = d.quotient_ideal().value_or(Ideal(ring));
    const Ideal prime = p.ideal(ring).plus(base);

    SimplicityReport rep{TrivialSolution{}, std::nullopt, dimension(base), dimension(prime), 0, {}, {}, {}};
    rep.codimension = rep.ring_dimension - rep.prime_dimension;
    if (is_trivial(d, p)) return rep;

    rep.kernel = kernel_approx(d, p, degree, order);
    std::vector<Poly> candidates;
    for (const auto& g : rep.kernel->basis) {
        if (!base.contains(g)) candidates.push_back(g);
    }
    rep.verdict = NoObstructionUpTo{degree, order};
    if (candidates.empty()) return rep;

    std::stable_sort(candidates.begin(), candidates.end(), [&](const Poly& a, const Poly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return ring->order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<std::vector<Poly>> seeds;
    seeds.push_back(candidates);
    if (candidates.size() > 1) {
        for (const auto& g : candidates) seeds.push_back({g});
    }
    for (const auto& seed : seeds) {
        Ideal witness(ring);
        try {
            witness = saturate_stable(d, base.plus(seed), saturation_cap);
        } catch (const ResourceError& e) {
            rep.warnings.push_back(std::string("saturation cap exceeded; verdict downgraded: ") + e.what());
            continue;
        }
        NotSimple ns{witness, stabilizes(d, witness), true, false};
        for (const auto& g : witness.generators()) {
            if (!residue_eval(p, g).is_zero()) ns.inside_prime = false;
        }
        ns.nonzero = !base.contains(witness);
        if (ns.d_stable && ns.inside_prime && ns.nonzero) {
            rep.witness_dimension = dimension(witness);
            rep.trdeg_upper_bound = *rep.witness_dimension - rep.prime_dimension;
            rep.verdict = std::move(ns);
            return rep;
        }
    }
    rep.warnings.push_back("kernel candidates found but no D-stable witness inside the prime was certified");
    return rep;
}

QuotientDiagnostic annihilator_check(const Derivation& d, const PrimeSpec& p, const Ideal& kernel_candidate) {
    if (!d.quotient_ideal()) throw InputError("annihilator check needs a quotient ideal");
    if (!p.is_point()) throw InputError("annihilator check needs a rational point");
    if (kernel_candidate.is_unit()) throw InputError("kernel candidate is the unit ideal; kernels of solutions are proper");
    const Ideal& quot = *d.quotient_ideal();
    Ideal transporter = Ideal::unit(d.ring());
    for (const auto& g : kernel_candidate.generators()) transporter = intersect(transporter, quotient(quot, g));
    bool escapes = false;
    for (const auto& u : transporter.generators()) {
        if (!residue_eval(p, u).is_zero()) escapes = true;
    }
    return QuotientDiagnostic{escapes, transporter};
}

LiftReport quotient_lift_check(const Derivation& dhat, const Ideal& ideal, const PrimeSpec& p, std::size_t degree,
                               std::size_t order) {
    Derivation plain = dhat.lift();
    for (const auto& g : ideal.generators()) {
        if (!residue_eval(p, g).is_zero()) throw InputError("prime does not lie on V(I)");
    }
    LiftReport rep;
    rep.stable = stabilizes(plain, ideal);
    if (!rep.stable) return rep;
    KernelApprox k = kernel_approx(plain, p, degree, order);
    rep.ideal_in_kernel_span = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                           [&](const Poly& g) { return kernel_span_contains(k, g); });
    rep.kernel_in_ideal =
        std::all_of(k.basis.begin(), k.basis.end(), [&](const Poly& g) { return ideal.contains(g); });
    return rep;
}

}  // namespace dring
